#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "twistbt/element.hpp"

namespace twistbt {

/// Raised when a bounded search gives up.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// An element (v, g) of the permutational wreath product Z wr_S G.  Zero
/// entries of v are omitted.
struct WreathElement {
  std::map<Color, long> vector;
  Word label;
};

/// (v, g)(w, h) = (v + g.w, gh) with (g.w)(s) = w(g^-1.s).
WreathElement wreath_multiply(const LabelGroup& group, const WreathElement& a, const WreathElement& b);
WreathElement wreath_inverse(const LabelGroup& group, const WreathElement& a);
bool wreath_equal(const LabelGroup& group, const WreathElement& a, const WreathElement& b);

/// One factor u h u^-1 (or u h^-1 u^-1 when `inverse` is set).
struct ConjugacyTerm {
  bool inverse = false;
  Quadruple conjugator;
};

struct ConjugacyWord {
  std::vector<ConjugacyTerm> terms;

  /// Substitute h and multiply the terms left to right.
  Quadruple evaluate(const Groupoid& sv, const Quadruple& h) const;
};

bool in_canonical_kernel(const Groupoid& sv, const Quadruple& h);

/// D_B(g) = [T, id, (1..g..1), T] with T = tree_for_brick(psi).
Quadruple deferment(const Groupoid& sv, const Brick& psi, const Word& g);

/// Whether h fixes every point outside the union of the pairwise disjoint
/// bricks `u` with germinal twist exactly 1 there.
bool in_full_deferment(const Groupoid& sv, const Quadruple& h, const std::vector<Brick>& u);

struct NamedElement {
  std::string name;
  Quadruple element;
};

/// Generators of SV_G for finite S: V (|S| = 1) or 2V generators for every
/// pair of colors, plus iota(a) and iota1(s0, a) for each label generator a.
std::vector<NamedElement> generating_set(const Groupoid& sv);

struct CommutatorPair {
  Quadruple c;
  Quadruple d;
};

/// h = [first.c, first.d] [second.c, second.d] for h in SK_G.
struct KernelDecomposition {
  CommutatorPair first;
  CommutatorPair second;
};

KernelDecomposition sk_commutator_decomposition(const Groupoid& sv, const Quadruple& h);

struct WitnessBudget {
  std::size_t bits_per_color = 16;
  std::size_t max_candidates = 200000;
};

/// A product of conjugates of h^{+-1} equal to D_psi(k), for h outside SK_G
/// and k in the kernel of the action.
ConjugacyWord normal_generation_witness(const Groupoid& sv, const Quadruple& h, const Brick& psi, const Word& k,
                                        const WitnessBudget& budget = {});

/// rho_kappa(h): s -> |phi(s)| - |psi(g^-1.s)| for the domain brick psi
/// containing kappa, its image phi and the twist g there, paired with g.
WreathElement quasi_retract(const Groupoid& sv, const Quadruple& h, const CantorPoint& kappa);

/// The unit generator at color s: 0w -> 00w, 10w -> 01w, 11w -> 1w in
/// coordinate s.
Quadruple zeta_generator(const Groupoid& sv, Color s);

/// Homomorphic section of quasi_retract at the basepoint.
Quadruple section_zeta(const Groupoid& sv, const WreathElement& w);

}  // namespace twistbt
