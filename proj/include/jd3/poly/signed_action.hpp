#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "jd3/poly/poly.hpp"

namespace jd3 {

enum class Character { trivial, sign };

/// A permutation of variable indices together with the scalar (+1 or -1) the
/// group element contributes.  Variable i is relabelled to perm[i].
struct SignedPermAction {
  std::vector<std::size_t> perm;
  int character = 1;

  SignedPermAction(std::vector<std::size_t> p, int chi) : perm(std::move(p)), character(chi) {
    if (chi != 1 && chi != -1) throw std::invalid_argument("SignedPermAction: character must be +1 or -1");
    std::vector<bool> seen(perm.size(), false);
    for (auto i : perm) {
      if (i >= perm.size() || seen[i]) throw std::invalid_argument("SignedPermAction: not a bijection");
      seen[i] = true;
    }
  }

  static SignedPermAction identity(std::size_t n, int chi = 1) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return {std::move(p), chi};
  }

  static SignedPermAction transposition(std::size_t n, std::size_t i, std::size_t j, int chi) {
    auto a = identity(n, chi);
    std::swap(a.perm[i], a.perm[j]);
    return a;
  }
};

inline int permutation_sign(const std::vector<std::size_t>& perm) {
  int s = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) s = -s;
  return s;
}

/// All n! permutations in lexicographic order, each carrying the trivial or
/// the sign character.
inline std::vector<SignedPermAction> symmetric_group(std::size_t n, Character chi) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<SignedPermAction> out;
  do {
    out.emplace_back(p, chi == Character::sign ? permutation_sign(p) : 1);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Relabels the first perm.size() variables of p and multiplies by the
/// character.  Variables beyond the permutation are left in place.
inline Poly act(const SignedPermAction& a, const Poly& p) {
  trace::touch(trace::Op::act);
  if (a.perm.size() > p.vars().size()) throw std::invalid_argument("act: permutation larger than variable set");
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    for (std::size_t i = 0; i < a.perm.size(); ++i) m.set(a.perm[i], t.mono[i]);
    terms.push_back({m, a.character == 1 ? t.coef : -t.coef});
  }
  return Poly::from_terms(p.vars(), std::move(terms));
}

/// (1/|G|) * sum over g of act(g, p).  The character is a per-degree choice,
/// so p must be homogeneous.
inline Poly symmetrize(const Poly& p, const std::vector<SignedPermAction>& group) {
  trace::touch(trace::Op::symmetrize);
  if (group.empty()) throw std::invalid_argument("symmetrize: empty group");
  if (!p.is_homogeneous()) throw std::invalid_argument("symmetrize: polynomial is not homogeneous");
  std::vector<Term> terms;
  terms.reserve(p.size() * group.size());
  for (const auto& g : group) {
    const Poly img = act(g, p);
    terms.insert(terms.end(), img.terms().begin(), img.terms().end());
  }
  Poly sum = Poly::from_terms(p.vars(), std::move(terms));
  return sum * BigRational(BigInt(1), BigInt(static_cast<unsigned long>(group.size())));
}

}  // namespace jd3
