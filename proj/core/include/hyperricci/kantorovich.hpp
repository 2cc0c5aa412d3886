#pragma once

#include <cstdint>
#include <vector>

#include "hyperricci/hypergraph.hpp"
#include "hyperricci/resolvent.hpp"

namespace hyperricci {

struct KdOptions {
  std::size_t enumeration_cap = 2048;  // integer seeds enumerated up to this many
  int random_vertices = 48;            // LP vertex seeds when enumeration overflows
  int refine = 4;                      // best seeds refined by coordinate ascent
  int max_sweeps = 40;
  double line_tol = 1e-11;             // golden-section bracket width
  std::uint64_t seed = 0;
};

// Best value found for a Kantorovich difference and where it was attained.
// The search is multi-start coordinate ascent seeded at the integer
// vertices of the anchored Lipschitz polytope; the value is a certified
// lower bound of the supremum (up to the prox gap).
struct KdResult {
  double value = 0.0;
  Vector potential;          // u with u(y) = 0
  double stationarity = 0.0;  // largest one-coordinate gain left in the final sweep
  double prox_gap = 0.0;      // largest resolvent duality gap seen
  int evaluations = 0;
  int seeds = 0;
  bool enumerated = false;   // seeds were every integer vertex
};

// sup over Lip of <J_lambda f, delta_x - delta_y>.
KdResult kd(const Hypergraph& h, int x, int y, double lambda, const KdOptions& options = {});
// Same supremum restricted to u(x) - u(y) = d(x, y).
KdResult wkd(const Hypergraph& h, int x, int y, double lambda, const KdOptions& options = {});

enum class KappaVariant { Iktu, Wiktu };

struct KappaRow {
  double lambda = 0.0;
  double difference = 0.0;  // KD or wKD
  double kappa = 0.0;       // (1 - difference / d) / lambda
  double pairing = 0.0;     // <L^0 f_lambda, delta_x - delta_y> at the maximizer
  Vector potential;
  double stationarity = 0.0;
  double prox_gap = 0.0;
};

struct CurvatureReport {
  int x = -1;
  int y = -1;
  int distance = 0;
  KappaVariant variant = KappaVariant::Iktu;
  std::vector<KappaRow> rows;
  bool stabilized = false;
  double kappa = 0.0;
  double lambda = 0.0;           // smallest lambda used for the returned value
  double pairing_constant = 0.0;
};

// Carries the raw per-lambda table of a run that never settled.
class CurvatureNonStabilized : public NonStabilized {
 public:
  explicit CurvatureNonStabilized(CurvatureReport report);
  const CurvatureReport& report() const noexcept { return report_; }

 private:
  CurvatureReport report_;
};

inline const std::vector<double> kDefaultSchedule{1e-2, 1e-3, 1e-4, 1e-5};

struct KappaOptions {
  std::vector<double> schedule = kDefaultSchedule;
  double stabilization = 1e-3;
  bool full_schedule = false;  // keep going after the estimate settles
  KdOptions search;
};

// kappa_IKTU or kappa_wIKTU along the lambda schedule. Throws
// CurvatureNonStabilized when no two consecutive estimates agree.
CurvatureReport kappa(const Hypergraph& h, int x, int y, KappaVariant variant, const KappaOptions& options = {});

}  // namespace hyperricci
