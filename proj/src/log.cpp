#include "feddelavg/log.hpp"

#include <atomic>
#include <cstdio>

namespace feddelavg::log {

namespace {
std::atomic<Level> g_level{Level::Warn};

void emit(const char* tag, const std::string& msg) {
  std::fprintf(stderr, "[%s] %s\n", tag, msg.c_str());
}
}  // namespace

void set_level(Level level) { g_level.store(level); }
Level level() { return g_level.load(); }

bool set_level_by_name(const std::string& name) {
  if (name == "error") { set_level(Level::Error); return true; }
  if (name == "warn") { set_level(Level::Warn); return true; }
  if (name == "info") { set_level(Level::Info); return true; }
  if (name == "debug") { set_level(Level::Debug); return true; }
  return false;
}

void error(const std::string& msg) {
  if (level() >= Level::Error) emit("error", msg);
}
void warn(const std::string& msg) {
  if (level() >= Level::Warn) emit("warn", msg);
}
void info(const std::string& msg) {
  if (level() >= Level::Info) emit("info", msg);
}
void debug(const std::string& msg) {
  if (level() >= Level::Debug) emit("debug", msg);
}

}  // namespace feddelavg::log
