#pragma once

#include <optional>
#include <vector>

#include "koszulkit/complexes.hpp"
#include "koszulkit/error.hpp"

namespace koszulkit {

// Number of variables + 2; resolutions over k[x_1..x_m] end by degree m.
int default_resolution_bound(const RingHandle& ring);

// F_0..F_top of a resolution as a chain complex.
ChainComplex resolution_complex(const FreeResolution& F, int top);

// Throws ResolutionBoundExceeded when i > L and the resolution did not terminate.
FPModule tor(int i, const FPModule& N, const FPModule& M, std::optional<int> L = std::nullopt);
FPModule ext(int i, const FPModule& N, const FPModule& M, std::optional<int> L = std::nullopt);

// Tor_0..Tor_s and Ext^0..Ext^s sharing one resolution of N.
std::vector<FPModule> tor_range(const FreeResolution& F, const FPModule& M, int s);
std::vector<FPModule> ext_range(const FreeResolution& F, const FPModule& M, int s);

// Chain map phi_0..phi_top from F to G lifting f : F.module -> G.module, where
// f is given on generators. Lifts come from the tracked Gröbner basis of each
// target differential, so the choice is deterministic.
std::vector<Matrix> comparison_lift(const FreeResolution& F, const FreeResolution& G, const Matrix& f, int top);

// Stages E_t = Ext^i(R/a^t, M), t = 1..t_max, with transitions E_t -> E_{t+1}
// induced by R/a^{t+1} -> R/a^t.
struct ExtTower {
  IdealGens ideal;
  FPModule module;
  int degree = 0;
  std::vector<FPModule> stages;
  std::vector<ModuleMap> transitions;
};
ExtTower ext_tower(const IdealGens& a, const FPModule& M, int i, int t_max);
ModuleMap induced_ext_map(const IdealGens& a, const FPModule& M, int i, int t);

struct SocleResult {
  FPModule socle;
  // First stage t* whose next two transitions restrict to socle isomorphisms.
  int stage = 0;
  // Hom(R/a, E_t) for the stages computed.
  std::vector<FPModule> socles;
};

class UnstabilizedError : public Error {
 public:
  UnstabilizedError(int t_max, std::vector<FPModule> socles)
      : Error("socle tower did not stabilize by t = " + std::to_string(t_max)), t_max_(t_max),
        socles_(std::move(socles)) {}
  int t_max() const { return t_max_; }
  const std::vector<FPModule>& socles() const { return socles_; }

 private:
  int t_max_;
  std::vector<FPModule> socles_;
};

// Hom(R/a, H^i_a(M)) as the colimit of Hom(R/a, Ext^i(R/a^t, M)). A transition
// counts as an isomorphism when the restricted map has zero kernel and cokernel
// and both socles pass the isomorphism proxy.
SocleResult local_cohomology_socle(const IdealGens& a, const FPModule& M, int i, int t_max = 8);

}  // namespace koszulkit
