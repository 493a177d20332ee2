#include "gradalg/poly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace gradalg {

namespace {

int permutation_parity(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); i++)
    for (size_t j = i + 1; j < p.size(); j++)
      if (p[i] > p[j]) inv++;
  return inv % 2;
}

/* all permutations of 0..m-1 with their parities, in lexicographic order */
struct PermList {
  std::vector<std::vector<int>> perms;
  std::vector<int> parities;
};

PermList permutations_of(int m) {
  PermList out;
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.perms.push_back(p);
    out.parities.push_back(permutation_parity(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void collect_leaf_ids(const GradedPolynomial& p, std::vector<int>& out) {
  for (const GradedVariable& v : p.variables)
    if (!p.subpolynomial(v.id)) out.push_back(v.id);
  for (const auto& [id, sub] : p.composition) collect_leaf_ids(sub, out);
}

}  // namespace

GradedPolynomial GradedPolynomial::make(std::vector<GradedVariable> variables,
                                        std::vector<GradedMonomial> monomials,
                                        std::vector<std::pair<int, GradedPolynomial>> composition,
                                        std::vector<std::vector<int>> alternation_sets) {
  GradedPolynomial p;
  std::sort(variables.begin(), variables.end(),
            [](const GradedVariable& a, const GradedVariable& b) { return a.id < b.id; });
  for (size_t k = 1; k < variables.size(); k++)
    if (variables[k].id == variables[k - 1].id)
      raise(ErrorKind::ParseError, "duplicate variable id");
  p.variables = std::move(variables);

  std::vector<int> ids;
  for (const GradedVariable& v : p.variables) ids.push_back(v.id);
  for (const GradedMonomial& m : monomials) {
    if (m.factors.empty()) raise(ErrorKind::ParseError, "empty monomial");
    std::vector<int> sorted = m.factors;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != ids)
      raise(ErrorKind::ParseError, "monomial must use every variable exactly once");
  }
  p.monomials = std::move(monomials);

  std::sort(composition.begin(), composition.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t k = 0; k < composition.size(); k++) {
    if (k > 0 && composition[k].first == composition[k - 1].first)
      raise(ErrorKind::ParseError, "duplicate composition node");
    if (!std::binary_search(ids.begin(), ids.end(), composition[k].first))
      raise(ErrorKind::ParseError, "composition node is not a variable");
  }
  p.composition = std::move(composition);

  std::vector<int> leaves;
  collect_leaf_ids(p, leaves);
  std::sort(leaves.begin(), leaves.end());
  for (size_t k = 1; k < leaves.size(); k++)
    if (leaves[k] == leaves[k - 1])
      raise(ErrorKind::ParseError, "leaf variable ids must be unique across composition");

  std::set<int> in_sets;
  for (const std::vector<int>& s : alternation_sets) {
    int degree = -1;
    for (int id : s) {
      const GradedVariable* v = p.find_variable(id);
      if (!v || p.subpolynomial(id))
        raise(ErrorKind::ParseError, "alternation over a missing or composed variable");
      if (!in_sets.insert(id).second)
        raise(ErrorKind::SetsNotDisjoint, "variable in two alternation sets");
      if (degree < 0) degree = v->degree;
      if (v->degree != degree)
        raise(ErrorKind::MixedDegreesInSet, "alternation set mixes degrees");
    }
  }
  p.alternation_sets = std::move(alternation_sets);
  return p;
}

const GradedVariable* GradedPolynomial::find_variable(int id) const {
  auto it = std::lower_bound(variables.begin(), variables.end(), id,
                             [](const GradedVariable& v, int k) { return v.id < k; });
  return (it != variables.end() && it->id == id) ? &*it : nullptr;
}

const GradedPolynomial* GradedPolynomial::subpolynomial(int id) const {
  auto it = std::lower_bound(composition.begin(), composition.end(), id,
                             [](const auto& e, int k) { return e.first < k; });
  return (it != composition.end() && it->first == id) ? &it->second : nullptr;
}

std::vector<int> GradedPolynomial::leaf_ids() const {
  std::vector<int> out;
  collect_leaf_ids(*this, out);
  std::sort(out.begin(), out.end());
  return out;
}

int GradedPolynomial::leaf_degree(int id) const {
  const GradedVariable* v = find_variable(id);
  if (v && !subpolynomial(id)) return v->degree;
  for (const auto& [cid, sub] : composition) {
    std::vector<int> leaves = sub.leaf_ids();
    if (std::binary_search(leaves.begin(), leaves.end(), id)) return sub.leaf_degree(id);
  }
  raise(ErrorKind::IndexOutOfRange, "no such leaf variable");
}

std::optional<int> homogeneous_degree(const GradedPolynomial& p, const GroupPtr& G) {
  std::optional<int> common;
  for (const GradedMonomial& m : p.monomials) {
    int d = G->identity();
    for (int f : m.factors) d = G->mul(d, p.find_variable(f)->degree);
    if (!common) common = d;
    if (*common != d) return std::nullopt;
  }
  return common;
}

GradedPolynomial remap_degrees(const GradedPolynomial& p, const std::map<int, int>& degree_map) {
  GradedPolynomial out = p;
  for (GradedVariable& v : out.variables) {
    auto it = degree_map.find(v.degree);
    if (it == degree_map.end()) raise(ErrorKind::IndexOutOfRange, "degree missing from the map");
    v.degree = it->second;
  }
  for (auto& [id, sub] : out.composition) sub = remap_degrees(sub, degree_map);
  return out;
}

GradedPolynomial alternate(const GradedPolynomial& p, long long max_monomials) {
  long long count = static_cast<long long>(p.monomials.size());
  std::vector<PermList> lists;
  for (const std::vector<int>& s : p.alternation_sets) {
    lists.push_back(permutations_of(static_cast<int>(s.size())));
    count *= static_cast<long long>(lists.back().perms.size());
    if (count > max_monomials)
      raise(ErrorKind::BudgetExceeded, "alternation expansion too large");
  }

  GradedPolynomial out;
  out.variables = p.variables;
  out.composition = p.composition;
  out.degenerate = p.degenerate;

  std::vector<size_t> pick(p.alternation_sets.size(), 0);
  while (true) {
    std::map<int, int> sub;
    int parity = 0;
    for (size_t s = 0; s < pick.size(); s++) {
      const std::vector<int>& members = p.alternation_sets[s];
      const std::vector<int>& perm = lists[s].perms[pick[s]];
      parity = (parity + lists[s].parities[pick[s]]) % 2;
      for (size_t t = 0; t < members.size(); t++) sub[members[t]] = members[perm[t]];
    }
    const CycloScalar sign = CycloScalar::from_rational(1, Rational(parity ? -1 : 1));
    for (const GradedMonomial& m : p.monomials) {
      GradedMonomial nm;
      nm.coefficient = mul_lifted(m.coefficient, sign);
      nm.factors.reserve(m.factors.size());
      for (int f : m.factors) {
        auto it = sub.find(f);
        nm.factors.push_back(it == sub.end() ? f : it->second);
      }
      out.monomials.push_back(std::move(nm));
    }
    size_t s = 0;
    while (s < pick.size() && ++pick[s] == lists[s].perms.size()) pick[s++] = 0;
    if (s == pick.size()) break;
  }
  return out;
}

namespace {

/* shared evaluation core: resolved values per this-level variable, summed
   over the symbolic alternation permutations */
AlgebraElement eval_resolved(const GradedPolynomial& p, const Presentation& P,
                             const std::map<int, AlgebraElement>& values) {
  std::vector<PermList> lists;
  for (const std::vector<int>& s : p.alternation_sets)
    lists.push_back(permutations_of(static_cast<int>(s.size())));

  AlgebraElement result;
  std::vector<size_t> pick(p.alternation_sets.size(), 0);
  while (true) {
    std::map<int, int> sub;
    int parity = 0;
    for (size_t s = 0; s < pick.size(); s++) {
      const std::vector<int>& members = p.alternation_sets[s];
      const std::vector<int>& perm = lists[s].perms[pick[s]];
      parity = (parity + lists[s].parities[pick[s]]) % 2;
      for (size_t t = 0; t < members.size(); t++) sub[members[t]] = members[perm[t]];
    }
    const CycloScalar sign = CycloScalar::from_rational(1, Rational(parity ? -1 : 1));
    auto value_of = [&](int id) -> const AlgebraElement& {
      auto it = sub.find(id);
      return values.at(it == sub.end() ? id : it->second);
    };
    for (const GradedMonomial& m : p.monomials) {
      AlgebraElement prod = value_of(m.factors[0]);
      for (size_t k = 1; k < m.factors.size() && !prod.is_zero(); k++)
        prod = multiply(P, prod, value_of(m.factors[k]));
      result = add(result, scale(mul_lifted(m.coefficient, sign), prod));
    }
    size_t s = 0;
    while (s < pick.size() && ++pick[s] == lists[s].perms.size()) pick[s++] = 0;
    if (s == pick.size()) break;
  }
  return result;
}

void check_homogeneous_value(const Presentation& P, const AlgebraElement& val, int degree) {
  for (const auto& [b, c] : val.terms)
    if (degree_of(P, b) != degree)
      raise(ErrorKind::DegreeMismatch, "value not homogeneous of the variable's degree");
}

}  // namespace

AlgebraElement evaluate(const GradedPolynomial& p, const Presentation& P,
                        const std::map<int, AlgebraElement>& assignment) {
  std::map<int, AlgebraElement> values;
  for (const GradedVariable& v : p.variables) {
    if (const GradedPolynomial* sub = p.subpolynomial(v.id)) {
      AlgebraElement val = evaluate(*sub, P, assignment);
      check_homogeneous_value(P, val, v.degree);
      values.emplace(v.id, std::move(val));
    } else {
      auto it = assignment.find(v.id);
      if (it == assignment.end()) raise(ErrorKind::IndexOutOfRange, "unassigned variable");
      check_homogeneous_value(P, it->second, v.degree);
      values.emplace(v.id, it->second);
    }
  }
  return eval_resolved(p, P, values);
}

namespace {

/* single standard-basis term; products stay single-term, so basis-assignment
   evaluation avoids AlgebraElement maps until the final sum */
struct SingleTerm {
  StdBasisElement b;
  CycloScalar c;
};

std::optional<SingleTerm> mul_single(const Presentation& P, const SingleTerm& t,
                                     const StdBasisElement& next) {
  if (t.b.j != next.i) return std::nullopt;
  return SingleTerm{StdBasisElement{P.cocycle.group->mul(t.b.h, next.h), t.b.i, next.j},
                    mul_lifted(t.c, P.cocycle.value(t.b.h, next.h))};
}

AlgebraElement eval_basis_fast(const GradedPolynomial& p, const Presentation& P,
                               const BasisAssignment& assignment) {
  std::vector<PermList> lists;
  for (const std::vector<int>& s : p.alternation_sets)
    lists.push_back(permutations_of(static_cast<int>(s.size())));

  AlgebraElement result;
  std::vector<size_t> pick(p.alternation_sets.size(), 0);
  while (true) {
    std::map<int, int> sub;
    int parity = 0;
    for (size_t s = 0; s < pick.size(); s++) {
      const std::vector<int>& members = p.alternation_sets[s];
      const std::vector<int>& perm = lists[s].perms[pick[s]];
      parity = (parity + lists[s].parities[pick[s]]) % 2;
      for (size_t t = 0; t < members.size(); t++) sub[members[t]] = members[perm[t]];
    }
    auto value_of = [&](int id) -> const StdBasisElement& {
      auto it = sub.find(id);
      return assignment.at(it == sub.end() ? id : it->second);
    };
    for (const GradedMonomial& m : p.monomials) {
      std::optional<SingleTerm> acc = SingleTerm{value_of(m.factors[0]), m.coefficient};
      for (size_t k = 1; k < m.factors.size() && acc; k++)
        acc = mul_single(P, *acc, value_of(m.factors[k]));
      if (acc) {
        if (parity) acc->c = mul_lifted(acc->c, CycloScalar::from_rational(1, Rational(-1)));
        result.add_term(acc->b, acc->c);
      }
    }
    size_t s = 0;
    while (s < pick.size() && ++pick[s] == lists[s].perms.size()) pick[s++] = 0;
    if (s == pick.size()) break;
  }
  return result;
}

}  // namespace

AlgebraElement evaluate_basis(const GradedPolynomial& p, const Presentation& P,
                              const BasisAssignment& assignment) {
  for (const GradedVariable& v : p.variables)
    if (!p.subpolynomial(v.id)) {
      auto it = assignment.find(v.id);
      if (it == assignment.end()) raise(ErrorKind::IndexOutOfRange, "unassigned variable");
      if (degree_of(P, it->second) != v.degree)
        raise(ErrorKind::DegreeMismatch, "value not homogeneous of the variable's degree");
    }
  if (p.composition.empty()) return eval_basis_fast(p, P, assignment);
  std::map<int, AlgebraElement> lifted;
  for (const auto& [id, b] : assignment) lifted.emplace(id, AlgebraElement::basis(b));
  return evaluate(p, P, lifted);
}

IdentityVerdict is_identity(const GradedPolynomial& p, const Presentation& P, long long budget) {
  std::vector<int> leaves = p.leaf_ids();
  std::vector<std::vector<StdBasisElement>> candidates;
  for (int id : leaves) {
    candidates.push_back(basis_of_degree(P, p.leaf_degree(id)));
    if (candidates.back().empty()) return IdentityVerdict{IdentityVerdict::Kind::Identity, {}, 0};
  }
  /* pigeonhole: an alternation set larger than its component forces a
     repeated element into every assignment, and transposition pairs cancel */
  for (const std::vector<int>& set : p.alternation_sets) {
    const GradedVariable* v = set.empty() ? nullptr : p.find_variable(set.front());
    if (v && set.size() > basis_of_degree(P, v->degree).size())
      return IdentityVerdict{IdentityVerdict::Kind::Identity, {}, 0};
  }

  IdentityVerdict verdict;
  std::vector<size_t> pick(leaves.size(), 0);
  while (true) {
    if (verdict.assignments_tried >= budget) {
      verdict.kind = IdentityVerdict::Kind::Inconclusive;
      return verdict;
    }
    BasisAssignment assignment;
    for (size_t k = 0; k < leaves.size(); k++) assignment[leaves[k]] = candidates[k][pick[k]];
    verdict.assignments_tried++;
    if (!evaluate_basis(p, P, assignment).is_zero()) {
      verdict.kind = IdentityVerdict::Kind::NonIdentity;
      verdict.witness = std::move(assignment);
      return verdict;
    }
    // lexicographic order: the last variable advances fastest
    size_t k = leaves.size();
    while (k > 0 && ++pick[k - 1] == candidates[k - 1].size()) pick[--k] = 0;
    if (k == 0) break;
  }
  verdict.kind = IdentityVerdict::Kind::Identity;
  return verdict;
}

}  // namespace gradalg
