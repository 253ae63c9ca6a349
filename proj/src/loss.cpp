#include "feddelavg/loss.hpp"

#include <cmath>
#include <string>

namespace feddelavg {

namespace {

void check_shape(const LossModel& model, int data_dim, int data_classes,
                 const ModelParams& params) {
  const int want_rows =
      model.kind == LossKind::MultinomialCrossEntropy ? data_classes : 1;
  if (params.cols() != data_dim || params.rows() != want_rows) {
    throw ConfigError("parameter shape (" + std::to_string(params.rows()) +
                      " x " + std::to_string(params.cols()) +
                      ") does not match model shape (" +
                      std::to_string(want_rows) + " x " +
                      std::to_string(data_dim) + ")");
  }
  if (model.kind == LossKind::MultinomialCrossEntropy && data_classes < 2) {
    throw ConfigError("multinomial model requires classification data with >= 2 classes");
  }
}

}  // namespace

int param_rows(const LossModel& model, const Dataset& data) {
  return model.kind == LossKind::MultinomialCrossEntropy ? data.classes() : 1;
}

ModelParams zero_params(const LossModel& model, const Dataset& data) {
  return ModelParams::Zero(param_rows(model, data), data.dim());
}

double loss_point(const LossModel& model, const DataPoint& point,
                  const ModelParams& params) {
  if (params.cols() != point.features.size()) {
    throw ConfigError("parameter dimension " + std::to_string(params.cols()) +
                      " does not match feature dimension " +
                      std::to_string(point.features.size()));
  }
  switch (model.kind) {
    case LossKind::SquaredError: {
      const double r = point.label - params.row(0).dot(point.features);
      return 0.5 * r * r;
    }
    case LossKind::MultinomialCrossEntropy: {
      const Eigen::VectorXd z = params * point.features;
      const double zmax = z.maxCoeff();
      const double lse = std::log((z.array() - zmax).exp().sum()) + zmax;
      const auto y = static_cast<Eigen::Index>(point.label);
      return lse - z(y);
    }
  }
  throw ConfigError("unknown loss kind");
}

double local_loss(const LossModel& model, const Dataset& data,
                  const ModelParams& params) {
  check_shape(model, data.dim(), data.classes(), params);
  const Eigen::MatrixXd& x = data.features();
  const Eigen::VectorXd& y = data.labels();
  const double n = static_cast<double>(data.size());
  switch (model.kind) {
    case LossKind::SquaredError: {
      const Eigen::VectorXd r = x * params.row(0).transpose() - y;
      return 0.5 * r.squaredNorm() / n;
    }
    case LossKind::MultinomialCrossEntropy: {
      const Eigen::MatrixXd z = x * params.transpose();  // (n x s)
      const Eigen::VectorXd zmax = z.rowwise().maxCoeff();
      const Eigen::VectorXd lse =
          (z.colwise() - zmax).array().exp().rowwise().sum().log().matrix() + zmax;
      double total = 0.0;
      for (Eigen::Index p = 0; p < z.rows(); ++p) {
        total += lse(p) - z(p, static_cast<Eigen::Index>(y(p)));
      }
      return total / n;
    }
  }
  throw ConfigError("unknown loss kind");
}

ModelParams grad_local(const LossModel& model, const Dataset& data,
                       const ModelParams& params) {
  check_shape(model, data.dim(), data.classes(), params);
  const Eigen::MatrixXd& x = data.features();
  const Eigen::VectorXd& y = data.labels();
  const double n = static_cast<double>(data.size());
  switch (model.kind) {
    case LossKind::SquaredError: {
      const Eigen::VectorXd r = x * params.row(0).transpose() - y;
      return (r.transpose() * x) / n;
    }
    case LossKind::MultinomialCrossEntropy: {
      const Eigen::MatrixXd z = x * params.transpose();
      const Eigen::VectorXd zmax = z.rowwise().maxCoeff();
      Eigen::MatrixXd probs = (z.colwise() - zmax).array().exp().matrix();
      const Eigen::VectorXd rowsum = probs.rowwise().sum();
      probs.array().colwise() /= rowsum.array();
      for (Eigen::Index p = 0; p < probs.rows(); ++p) {
        probs(p, static_cast<Eigen::Index>(y(p))) -= 1.0;
      }
      return (probs.transpose() * x) / n;
    }
  }
  throw ConfigError("unknown loss kind");
}

double global_loss(const std::vector<LossModel>& models,
                   const std::vector<Dataset>& datasets,
                   const Eigen::VectorXd& weights, const ModelParams& params) {
  if (models.size() != datasets.size()) {
    throw ConfigError("model/dataset count mismatch");
  }
  check_weights(weights, datasets.size());
  double total = 0.0;
  for (std::size_t i = 0; i < datasets.size(); ++i) {
    total += weights(static_cast<Eigen::Index>(i)) *
             local_loss(models[i], datasets[i], params);
  }
  return total;
}

ModelParams grad_global(const std::vector<LossModel>& models,
                        const std::vector<Dataset>& datasets,
                        const Eigen::VectorXd& weights,
                        const ModelParams& params) {
  if (models.size() != datasets.size()) {
    throw ConfigError("model/dataset count mismatch");
  }
  check_weights(weights, datasets.size());
  ModelParams g = ModelParams::Zero(params.rows(), params.cols());
  for (std::size_t i = 0; i < datasets.size(); ++i) {
    g += weights(static_cast<Eigen::Index>(i)) *
         grad_local(models[i], datasets[i], params);
  }
  return g;
}

}  // namespace feddelavg
