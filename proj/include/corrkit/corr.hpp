#pragma once

#include <memory>
#include <optional>

#include "corrkit/sset_colim.hpp"

namespace corrkit {

// An n-correspondence: a simplicial set with a structure map to Delta^n.
struct Correspondence {
  SsetPtr total;
  int n = 0;
  SimplicialMap structure;  // total -> Delta^n
};

ValidationReport validate_corr(const Correspondence& X);

// Correspondence on a totally degenerate base point.
Correspondence trivial_corr(SsetPtr X);
// Delta^n over itself.
Correspondence delta_corr(int n);

// ---- fibers --------------------------------------------------------------

struct FiberResult {
  Correspondence corr;
  SimplicialMap into_total;  // corr.total -> source(f)
  PullbackResult pb;
};

// Pullback of f along the classifying map of sigma.
FiberResult fiber(const SimplicialMap& f, const SimplexRef& sigma);

// ---- faces and degeneracies ----------------------------------------------

// A correspondence derived from a root by iterated faces/degeneracies.  Keeps
// the chosen pullbacks so canonical comparison maps can be mediated; the weak
// simplicial identities hold only up to the isos these comparisons construct.
class DerivedCorr {
 public:
  Correspondence corr;
  SimplicialMap to_root;  // corr.total -> root total
  Monotone theta;         // base map [corr.n] -> [root n]; structure-compatible

  static DerivedCorr root(Correspondence X);
  DerivedCorr face(int i) const;        // pullback along delta^i
  DerivedCorr degeneracy(int i) const;  // pullback of the cylinder along iota_i

  // Canonical map W -> corr.total for a cone (wX : W -> root total,
  // wBase : W -> Delta^{corr.n}); nullopt if the cone does not commute.
  std::optional<SimplicialMap> mediate(const SimplicialMap& wX,
                                       const SimplicialMap& wBase) const;

 private:
  enum class Kind { Root, Face, Degeneracy };
  Kind kind_ = Kind::Root;
  int idx_ = 0;
  std::shared_ptr<const DerivedCorr> parent_;
  std::shared_ptr<const PullbackResult> pb_;
  std::shared_ptr<const ProductResult> cyl_;  // degeneracy only: parent x Delta^1
};

DerivedCorr corr_face(const Correspondence& X, int i);
DerivedCorr corr_degeneracy(const Correspondence& X, int i);

// ---- deletion presentations ----------------------------------------------

struct SubcomplexResult {
  SsetPtr object;
  SimplicialMap incl;
};

// Subcomplex on the kept cells; throws if not closed under faces.
SubcomplexResult subcomplex(SsetPtr X, const std::vector<char>& keep);

// d_iX and s_iX computed by deleting cells instead of by pullback, together
// with the canonical comparison into the pullback construction.
struct DeletionPresentation {
  Correspondence corr;
  SimplicialMap comparison;  // corr.total -> pullback-construction total
  bool iso = false;
};

DeletionPresentation face_by_deletion(const Correspondence& X, int i);
DeletionPresentation degeneracy_by_deletion(const Correspondence& X, int i);

// ---- weak simplicial identities ------------------------------------------

struct WeakIdentityReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Verifies, via mediated canonical comparisons, every applicable instance of
// d_i d_j = d_{j-1} d_i (i<j), d_i s_j = s_{j-1} d_i (i<j),
// d_i s_i = id = d_{i+1} s_i, and s_i s_j = s_{j+1} s_i (i<=j).
WeakIdentityReport weak_simplicial_identities_check(const Correspondence& X);

// ---- cotabulators ---------------------------------------------------------

struct Cotab {
  SsetPtr object;         // the total space
  SimplicialMap cocone;   // (id, structure) : total -> total x Delta^n
  ProductResult cylinder; // total x Delta^n
};

Cotab cotabulator(const Correspondence& X);

// ---- classifying diagrams and double colimits ----------------------------

struct CorrDiagram {
  SsetPtr base;
  int truncation = 0;  // simplices of dimension <= truncation are indexed
  std::vector<SimplexRef> simplices;
  std::map<SimplexRef, int> index;
  std::vector<FiberResult> at;
  // generator actions: at(sigma.delta_i) -> at(sigma), at(sigma.sigma_i) -> at(sigma)
  std::map<std::pair<SimplexRef, Monotone>, SimplicialMap> gen_act;
};

// The action X_{sigma theta} -> X_sigma for an arbitrary theta, composed from
// the stored generator actions along a factorization of theta.
SimplicialMap diagram_act(const CorrDiagram& D, const SimplexRef& sigma, const Monotone& theta);

// Checks the cosimplicial relations on the stored generator actions.
ValidationReport validate_corr_diagram(const CorrDiagram& D);

// sigma |-> fiber(f, sigma) with the induced actions; truncation defaults to
// dim(target) + 1.
CorrDiagram classifying_diagram(const SimplicialMap& f, int truncation = -1);

struct DoubleColimit {
  SsetPtr object;
  ColimitResult colim;      // over the truncated category of simplices
  SsetDiagram diagram;      // cotabulator totals with the actions as arrows
  std::vector<int> obj_of;  // diagram object index per D.simplices entry
};

DoubleColimit double_colimit(const CorrDiagram& D);

struct RoundtripResult {
  bool iso = false;
  SimplicialMap comparison;  // dcolim(phi_f) -> X
  std::string reason;
};

// Theorem-level check on an instance: the double colimit of the classifying
// diagram of f recovers its source.  truncation -1 means dim(target) + 1.
RoundtripResult roundtrip_check(const SimplicialMap& f, int truncation = -1);

// ---- vertical mapping spaces ---------------------------------------------

struct VerticalMappingSpace {
  std::vector<SimplicialMap> maps;  // X x Delta^n -> Y x Delta^n over Delta^n
  bool bijection_ok = false;        // matches maps X x Delta^n -> Y
};

VerticalMappingSpace vertical_mapping_space(SsetPtr X, SsetPtr Y, int n,
                                            std::uint64_t budget = 1'000'000);

}  // namespace corrkit
