#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlogic/model.hpp"
#include "qlogic/observables.hpp"
#include "qlogic/smap.hpp"

namespace qlogic::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_validate(const ModelFile& model, std::ostream& out, std::ostream& err);
int cmd_derive(const ModelFile& model, std::string_view from, const std::string& name,
               std::ostream& out, std::ostream& err);
int cmd_stats(const ModelFile& model, const std::string& smap, const std::string& x,
              const std::string& y, std::ostream& out, std::ostream& err);
int cmd_gen(const std::string& family, const std::string& params, std::uint64_t seed, std::ostream& out,
            std::ostream& err);
int cmd_check(const std::string& family, const std::string& params, std::size_t trials,
              std::uint64_t seed, std::ostream& out, std::ostream& err);
int cmd_repro(std::string_view id, std::ostream& out, std::ostream& err);

/// `boolean n`, `mo n` or `hsum k1,k2,...` (atoms per block).
Logic logic_for_family(const std::string& family, const std::string& params);

/// Builtin fixture text for "2.1", "2.2-printed" or "2.2-corrected".
std::optional<std::string_view> builtin_fixture(std::string_view id);

struct IndependenceVerdict {
  ElementId event;
  ElementId condition;
  bool independent;
};

struct StatsReport {
  JointDistribution joint_xy;
  JointDistribution joint_yx;
  Rational mean_x, mean_y;
  Rational moment_xy, moment_yx;
  CovarianceMatrix covariance;
  /// Empty when a variance is zero.
  std::optional<double> r_xy, r_yx;
  bool compatible = false;
  std::vector<IndependenceVerdict> independence;
};

StatsReport compute_stats(const SMap& p, const DiscreteObservable& x, const DiscreteObservable& y);

/// Fixed-point rendering with nine decimals, independent of the locale.
std::string format_float(double value);

}  // namespace qlogic::cli
