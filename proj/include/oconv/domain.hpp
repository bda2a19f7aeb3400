#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oconv {

/// Error codes shared across the library.
enum class Errc {
  // configuration / prices
  NonPositiveBudget,
  NonPositiveRate,
  BadPriceBounds,
  PriceOutOfBounds,
  BadScenario,
  // pseudo-cost
  SingularEvaluation,
  BudgetExceeded,
  // trader
  BadAlpha,
  NotifyInWrongMode,
  DoubleNotify,
  InconsistentNotify,
  StepAfterHorizon,
  // augmented
  BadLambda,
  // closed-form ratios
  DomainError,
  BadTheta,
  NoConvergence,
  InfeasibleHorizon,
  // instances / io
  ParseError,
  TooLarge,
  IoError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPositiveBudget: return "NonPositiveBudget";
    case Errc::NonPositiveRate: return "NonPositiveRate";
    case Errc::BadPriceBounds: return "BadPriceBounds";
    case Errc::PriceOutOfBounds: return "PriceOutOfBounds";
    case Errc::BadScenario: return "BadScenario";
    case Errc::SingularEvaluation: return "SingularEvaluation";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::BadAlpha: return "BadAlpha";
    case Errc::NotifyInWrongMode: return "NotifyInWrongMode";
    case Errc::DoubleNotify: return "DoubleNotify";
    case Errc::InconsistentNotify: return "InconsistentNotify";
    case Errc::StepAfterHorizon: return "StepAfterHorizon";
    case Errc::BadLambda: return "BadLambda";
    case Errc::DomainError: return "DomainError";
    case Errc::BadTheta: return "BadTheta";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::InfeasibleHorizon: return "InfeasibleHorizon";
    case Errc::ParseError: return "ParseError";
    case Errc::TooLarge: return "TooLarge";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

/// Exception carrying a typed error code. Validation entry points return it
/// by value instead of throwing; stateful operations throw.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Error(Errc code, const std::string& msg, std::size_t index, double value)
      : Error(code, msg) {
    index_ = index;
    value_ = value;
  }

  Errc code() const noexcept { return code_; }
  std::size_t index() const noexcept { return index_; }
  double value() const noexcept { return value_; }

 private:
  Errc code_;
  std::size_t index_ = 0;
  double value_ = 0.0;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

/// Absolute slack for budget-sum comparisons (accumulation error only).
inline constexpr double kBudgetSlack = 1e-9;

/// Scale-aware tolerance for comparisons against budget-sized quantities.
inline double budget_tol(double k) { return kBudgetSlack * std::max(1.0, k); }

/// Market parameters: budget k, per-step rate limit b, and the known price band.
struct MarketConfig {
  double k = 1.0;      ///< resource units to sell, > 0
  double b = 1.0;      ///< max units per step, > 0
  double p_min = 1.0;  ///< price floor, > 0
  double p_max = 1.0;  ///< price cap, >= p_min

  /// Fluctuation ratio p_max / p_min, >= 1 for a valid config.
  double theta() const { return p_max / p_min; }
};

/// Partition of the rate limit relative to budget and horizon.
/// Boundaries follow the half-open interval convention: b in (0, k/T] is
/// forced, b in (k/T, k) is non-trivial, b in [k, +inf) is unbounded.
enum class BoxClass { TrivialForced, NonTrivial, TrivialUnbounded };

inline const char* box_class_name(BoxClass c) {
  switch (c) {
    case BoxClass::TrivialForced: return "TrivialForced";
    case BoxClass::NonTrivial: return "NonTrivial";
    case BoxClass::TrivialUnbounded: return "TrivialUnbounded";
  }
  return "Unknown";
}

using PriceSequence = std::vector<double>;

/// Which horizon-information model is in force for a run.
struct HorizonScenario {
  enum class Kind { Known, Notice, Unknown, Prediction };

  Kind kind = Kind::Unknown;
  int T = 0;                        ///< Known: the horizon
  std::optional<int> notify_step;   ///< Notice: absent means never notified
  int T_revealed = 0;               ///< Notice: the true horizon (revealed on notify)
  int T_pred = 0;                   ///< Prediction: forecast horizon
  double lambda = 0.0;              ///< Prediction: confidence in [0, 1]

  static HorizonScenario known(int T) {
    if (T < 1) fail(Errc::BadScenario, "known horizon requires T >= 1");
    HorizonScenario s;
    s.kind = Kind::Known;
    s.T = T;
    return s;
  }
  static HorizonScenario notice(std::optional<int> notify_step, int T_revealed) {
    if (T_revealed < 1) fail(Errc::BadScenario, "notice horizon requires T >= 1");
    if (notify_step && (*notify_step < 1 || *notify_step > T_revealed))
      fail(Errc::BadScenario, "notify step must lie in [1, T]");
    HorizonScenario s;
    s.kind = Kind::Notice;
    s.notify_step = notify_step;
    s.T_revealed = T_revealed;
    return s;
  }
  static HorizonScenario unknown() {
    HorizonScenario s;
    s.kind = Kind::Unknown;
    return s;
  }
  static HorizonScenario prediction(int T_pred, double lambda) {
    if (T_pred < 1) fail(Errc::BadScenario, "predicted horizon requires T_pred >= 1");
    if (!(lambda >= 0.0 && lambda <= 1.0)) fail(Errc::BadLambda, "lambda must lie in [0, 1]");
    HorizonScenario s;
    s.kind = Kind::Prediction;
    s.T_pred = T_pred;
    s.lambda = lambda;
    return s;
  }

  const char* kind_name() const {
    switch (kind) {
      case Kind::Known: return "known";
      case Kind::Notice: return "notice";
      case Kind::Unknown: return "unknown";
      case Kind::Prediction: return "prediction";
    }
    return "unknown";
  }
};

/// Per-step allocations plus the revenue they earned.
struct TradeSchedule {
  std::vector<double> allocations;
  double revenue = 0.0;

  double total_allocated() const {
    double s = 0.0;
    for (double x : allocations) s += x;
    return s;
  }
};

/// Checks the MarketConfig invariants. Returns the first violation, if any.
inline std::optional<Error> validate_config(const MarketConfig& cfg) {
  if (!(cfg.k > 0.0)) return Error(Errc::NonPositiveBudget, "budget k must be > 0");
  if (!(cfg.b > 0.0)) return Error(Errc::NonPositiveRate, "rate limit b must be > 0");
  if (!(cfg.p_min > 0.0) || !(cfg.p_max >= cfg.p_min))
    return Error(Errc::BadPriceBounds, "require 0 < p_min <= p_max");
  return std::nullopt;
}

/// Throwing form of validate_config.
inline void require_valid(const MarketConfig& cfg) {
  if (auto err = validate_config(cfg)) throw *err;
}

/// Classifies the rate limit at horizon T. Boundary cases b = k/T and b = k
/// land in the trivial classes.
inline BoxClass classify_box(const MarketConfig& cfg, int T) {
  require_valid(cfg);
  if (T < 1) fail(Errc::BadScenario, "classify_box requires T >= 1");
  if (cfg.b * static_cast<double>(T) <= cfg.k) return BoxClass::TrivialForced;
  if (cfg.b >= cfg.k) return BoxClass::TrivialUnbounded;
  return BoxClass::NonTrivial;
}

/// All prices must lie inside [p_min, p_max]. Out-of-band prices are a hard
/// error, never clamped.
inline std::optional<Error> validate_prices(const MarketConfig& cfg, const PriceSequence& prices) {
  if (auto err = validate_config(cfg)) return err;
  for (std::size_t i = 0; i < prices.size(); ++i) {
    double p = prices[i];
    if (!(p >= cfg.p_min && p <= cfg.p_max)) {
      return Error(Errc::PriceOutOfBounds,
                   "price at index " + std::to_string(i) + " outside [p_min, p_max]", i, p);
    }
  }
  return std::nullopt;
}

inline void require_valid_prices(const MarketConfig& cfg, const PriceSequence& prices) {
  if (auto err = validate_prices(cfg, prices)) throw *err;
}

/// Box constraint exactly, budget within kBudgetSlack of accumulation error.
inline std::optional<Error> validate_schedule(const MarketConfig& cfg, const TradeSchedule& sched) {
  if (auto err = validate_config(cfg)) return err;
  for (std::size_t i = 0; i < sched.allocations.size(); ++i) {
    double x = sched.allocations[i];
    if (!(x >= 0.0 && x <= cfg.b)) {
      return Error(Errc::BudgetExceeded,
                   "allocation at step " + std::to_string(i + 1) + " violates box [0, b]", i, x);
    }
  }
  if (sched.total_allocated() > cfg.k + budget_tol(cfg.k)) {
    return Error(Errc::BudgetExceeded, "total allocation exceeds budget k");
  }
  return std::nullopt;
}

}  // namespace oconv
