#pragma once

#include <string>

namespace feddelavg::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

void set_level(Level level);
Level level();
bool set_level_by_name(const std::string& name);  // error|warn|info|debug

void error(const std::string& msg);
void warn(const std::string& msg);
void info(const std::string& msg);
void debug(const std::string& msg);

}  // namespace feddelavg::log
