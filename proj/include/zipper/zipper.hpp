#pragma once

// The zipper action of V_d(H). E is the set of classes [f, B] of local
// similarity embeddings f: B -> X up to precomposition with SIM(B1, B2);
// every class has a representative with domain X, and Z is the set of
// classes of ball inclusions. pi(g) = chi_{gZ} - chi_Z is the 1-cocycle
// whose support gZ symdiff Z has size 2(n - 1)/(d - 1), n = |max partition|.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zipper/elements.hpp"

namespace zipper {

  // Canonical representative of a class in E: a reduced embedding table with
  // domain X, lexicographically least among its twists f.s, s in SIM(X, X).
  class EClassRep {
   public:
    SimTable const& table() const noexcept {
      return _table;
    }
    std::vector<Row> const& rows() const noexcept {
      return _table.rows();
    }

    friend bool operator==(EClassRep const& a, EClassRep const& b) {
      return a.rows() == b.rows();
    }
    friend bool operator<(EClassRep const& a, EClassRep const& b) {
      return a.rows() < b.rows();
    }

   private:
    friend EClassRep canonical_from_domain_x(SimTable const&);
    explicit EClassRep(SimTable t) : _table(std::move(t)) {}
    SimTable _table;
  };

  // Canonical class of (f, B); f must be an embedding table whose domain is
  // the ball B. Throws invalid_class otherwise.
  EClassRep canonical_eclass(SimTable const& f, Word const& ball);
  // Canonical class of a domain-X embedding (or group element, viewed as
  // the embedding of X).
  EClassRep canonical_from_domain_x(SimTable const& f);

  // [incl_B, B].
  EClassRep ball_class(GroupPtr const& group, Word const& ball);
  // [g|_B, B] = g.[incl_B, B].
  EClassRep restriction_class(CanonicalElement const& g, Word const& ball);

  bool z_member(EClassRep const& e);
  EClassRep act_on_eclass(CanonicalElement const& g, EClassRep const& e);
  bool gz_member(CanonicalElement const& g, EClassRep const& e);

  // A finitely supported {+1, -1}-valued function on E, keyed canonically.
  using SignedSupport = std::map<EClassRep, int>;

  // gZ symdiff Z with sign +1 on gZ \ Z and -1 on Z \ gZ, built from the
  // balls properly containing maximum regions of g and of g^-1.
  SignedSupport symdiff(CanonicalElement const& g);
  // |gZ symdiff Z|.
  std::size_t zipper_length(CanonicalElement const& g);

  inline SignedSupport cocycle(CanonicalElement const& g) {
    return symdiff(g);
  }
  // Number of classes e where pi(g1 g2)(e) != pi(g2)(g1^-1 e) + pi(g1)(e).
  std::size_t cocycle_identity_defect(CanonicalElement const& g1,
                                      CanonicalElement const& g2);

  // Canonical representative of the coset gZ: least g.s over global germs
  // s, since the stabilizer of Z is the global copy of H.
  CanonicalElement coset_representative(CanonicalElement const& g);

  // |g1 Z symdiff g2 Z|, the number of walls separating g1 Z and g2 Z.
  std::size_t wall_separation(CanonicalElement const& g1,
                              CanonicalElement const& g2);

  // The space with walls S = {gZ}: walls are indexed by classes x with
  // half-spaces H_x^+ = {gZ : x in gZ} and H_x^-. The classes lying in every
  // or in no gZ are excluded lazily, relative to the points registered here.
  class WallSystem {
   public:
    explicit WallSystem(GroupPtr group);

    // Registers the orbit point gZ; returns its index.
    std::size_t add_point(CanonicalElement const& g);
    std::vector<CanonicalElement> const& points() const noexcept {
      return _points;
    }
    // x in gZ.
    bool in_positive_half(EClassRep const& x, std::size_t point) const;
    // Both half-spaces of x are nonempty among the registered points.
    bool is_wall(EClassRep const& x) const;
    // The walls separating two registered points, sorted; each is checked
    // against the half-space membership of both points.
    std::vector<EClassRep> separating_walls(std::size_t p, std::size_t q) const;

   private:
    GroupPtr                      _group;
    std::vector<CanonicalElement> _points;
  };

  ////////////////////////////////////////////////////////////////////////
  // Spaces with walls -> zipper actions
  ////////////////////////////////////////////////////////////////////////

  // A finite space with walls. Points are integer labels; a wall is given by
  // one half-space, the other being its complement. Group elements are maps
  // on labels, possibly partial (truncated models), keyed by name.
  struct WallSpace {
    std::vector<long long>              points;
    std::vector<std::vector<long long>> walls;
    long long                           basepoint = 0;
    std::vector<std::pair<std::string, std::map<long long, long long>>>
        elements;
  };

  struct ZipperCheck {
    std::string name;
    long long   image = 0;  // g p
    // |Z_{gp} symdiff Z_p| with Z_x the set of half-spaces containing x.
    std::size_t symdiff_size = 0;
    std::size_t separating_walls = 0;
    // For total bijective maps: whether g permutes the walls and g Z_p =
    // Z_{gp}; std::nullopt for partial maps.
    std::optional<bool> equivariant;
    bool ok = false;
  };

  struct ZipperReport {
    std::size_t              half_spaces = 0;  // |E|
    std::size_t              zipper_size = 0;  // |Z_p|
    std::vector<ZipperCheck> checks;
    bool all_ok() const;
  };

  // Throws invalid_wall on a wall that is not a partition into two nonempty
  // parts, or on labels that are not points.
  ZipperReport walls_to_zipper(WallSpace const& space);

  // The integers -k..k with walls {<= i} / {> i}, i in [-k, k), basepoint 0,
  // and the translations by g for |g| <= max_shift.
  WallSpace integer_line_model(long long k, long long max_shift);

  WallSpace parse_wall_space(std::string const& text);

  ////////////////////////////////////////////////////////////////////////
  // Properness audit
  ////////////////////////////////////////////////////////////////////////

  struct AuditRow {
    std::size_t radius     = 0;
    std::size_t ball_size  = 0;  // distinct elements within the radius
    std::size_t count      = 0;  // those with zipper length <= threshold
  };

  struct AuditReport {
    std::vector<AuditRow> rows;
    // The count was unchanged over the last two radius steps. Heuristic.
    bool stabilized = false;
  };

  // Breadth-first search of the Cayley ball (generators and their inverses)
  // with canonical-form deduplication.
  AuditReport properness_audit(GroupPtr const&                      group,
                               std::vector<CanonicalElement> const& generators,
                               std::size_t                          radius,
                               std::size_t                          threshold);

  ////////////////////////////////////////////////////////////////////////
  // Two classes separated by infinitely many of the sets gZ
  ////////////////////////////////////////////////////////////////////////

  struct NoWallsReport {
    EClassRep                     f1_class;  // inclusion of the ball 0
    EClassRep                     f2_class;  // 10w -> 10w, 11w -> 111w on 1
    std::vector<CanonicalElement> witnesses;
    // Per witness: f1_class in gZ and f2_class not in gZ.
    std::vector<bool>               checks;
    std::optional<CanonicalElement> vz_witness;  // h with f2_class in hZ
    bool all_ok() const;
  };

  // d = 2, trivial H; otherwise unsupported_structure. The witnesses are
  // the isometries fixing the ball 0 pointwise, enumerated by the depth of
  // a uniform partition of the ball 1 and then by permutation.
  NoWallsReport nowalls_demo(GroupPtr const& group, std::size_t count);

  // Elements with complete source and target codes of depth at most
  // max_depth and at most max_leaves leaves, in increasing leaf count, whose
  // canonical form uses those codes; stops at the first h with e in hZ.
  std::optional<CanonicalElement> find_gz_witness(GroupPtr const&  group,
                                                  EClassRep const& e,
                                                  std::size_t      max_depth,
                                                  std::size_t      max_leaves);

  // Searches for elements placing x inside and outside gZ; with both found,
  // x is in neither A = (intersection of all gZ) nor B = (intersection of
  // all complements).
  struct ExclusionProbe {
    std::optional<CanonicalElement> inside;
    std::optional<CanonicalElement> outside;
  };
  ExclusionProbe probe_exclusion(GroupPtr const&  group,
                                 EClassRep const& x,
                                 std::size_t      max_depth,
                                 std::size_t      max_leaves);

}  // namespace zipper
