#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbil/catalog.hpp"

namespace qbil {

enum class Status { PASS, FAIL, CONSTRAINT_VIOLATION, DEGENERATE, SKIP, ERROR };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::PASS: return "PASS";
    case Status::FAIL: return "FAIL";
    case Status::CONSTRAINT_VIOLATION: return "CONSTRAINT_VIOLATION";
    case Status::DEGENERATE: return "DEGENERATE";
    case Status::SKIP: return "SKIP";
    case Status::ERROR: return "ERROR";
  }
  return "?";
}

struct CheckOptions {
  Tower tower = Tower::Double;
  bool tower_forced = false;  // set when --tower was given explicitly
  unsigned big_digits = kDefaultBigDigits;
  std::optional<double> residual_tol;  // overrides the per-identity table
  long max_terms = 10000;
  int workers = 0;  // 0: hardware concurrency
  std::optional<Shape> shape;
  int r_max = 6, s_max = 3, m_max = 4;
};

struct CertSummary {
  long forward_cut = 0;
  long backward_cut = 0;
  long product_cut = 0;
  double gap = 0.0;  // certified upper bound on |LHS - RHS|
  double eps = 0.0;
  bool certified = false;
};

struct VerificationReport {
  std::string identity;
  uint64_t seed = 0;
  long index = 0;
  PointRecord point;
  Tower tower = Tower::Double;
  std::string lhs, rhs;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  Status status = Status::ERROR;
  std::string error;  // error kind when status is ERROR
  std::vector<ConstraintResult> constraint_results;
  Diag diagnostics;
  double wall_ms = 0.0;
  std::optional<CertSummary> certificate;
};

struct SweepSummary {
  std::string identity;
  long n_points = 0;
  long pass = 0, fail = 0, skip = 0;
  double max_residual = 0.0;
  double wall_s = 0.0;
};

struct SweepResult {
  std::vector<VerificationReport> reports;
  SweepSummary summary;
};

// Per-identity acceptance thresholds; verification policy, not mathematics.
double tolerance_for(const Identity& I, Tower t);
Tower pick_tower(const Identity& I, const CheckOptions& o);

// Deterministic rejection sampling of a constraint-satisfying point.
PointRecord sample_point(const Identity& I, uint64_t seed, uint64_t index,
                         const CheckOptions& o);

VerificationReport check_identity(const Identity& I, const PointRecord& pr,
                                  const CheckOptions& o);

SweepResult sweep(const Identity& I, long n_points, uint64_t seed, const CheckOptions& o);

std::vector<VerificationReport> check_kernel(const Identity& I, int n_lo, int n_hi,
                                             const PointRecord& base, const CheckOptions& o);

// Exact-rational check of a terminating identity: literal equality.
VerificationReport check_exact_terminating(const Identity& I, const PointRecord& pr,
                                           const CheckOptions& o);

// Certified verification at an exact rational point: all series tails and
// infinite products are rigorously enclosed and |LHS - RHS| <= eps is proven.
VerificationReport certify(const Identity& I, const PointRecord& pr, const Rational& eps,
                           const CheckOptions& o);

// Value-level consistency of a registered specialization map at one sampled
// pair of points; returns the worst relative residual over both sides.
double check_specialization(const SpecializationMap& map, uint64_t seed, const CheckOptions& o);

}  // namespace qbil
