#include "tworay/blowup.hpp"

#include <algorithm>
#include <numeric>

namespace tworay {

std::vector<Weight> Model::equation_degrees() const {
  std::vector<Weight> out;
  for (const auto& e : eqs) out.push_back(bidegree(e, cox));
  return out;
}

int find_tangent_variable(const SparsePoly& eq, const SingularPoint& point,
                          std::optional<int> designated) {
  std::vector<int> candidates;
  for (const auto& [e, c] : eq.terms()) {
    if (e[point.var] < 1) continue;
    int v = -1;
    bool ok = true;
    for (int i = 0; i < eq.arity() && ok; ++i) {
      if (i == point.var || e[i] == 0) continue;
      if (e[i] == 1 && v == -1)
        v = i;
      else
        ok = false;
    }
    if (ok && v >= 0 && std::find(candidates.begin(), candidates.end(), v) == candidates.end())
      candidates.push_back(v);
  }
  if (designated) {
    if (std::find(candidates.begin(), candidates.end(), *designated) == candidates.end())
      fail(Err::NoTangentMonomial, "designated tangent variable has no witness monomial");
    return *designated;
  }
  if (candidates.empty()) fail(Err::NoTangentMonomial, "no monomial of the form p^k * v");
  if (candidates.size() > 1) fail(Err::AmbiguousTangent, "several tangent candidates; designate one");
  return candidates.front();
}

namespace {

Int weighted_sum(const Expo& e, const std::vector<Int>& w) {
  Int s = 0;
  for (size_t i = 0; i < e.size(); ++i) s += w[i] * e[i];
  return s;
}

}  // namespace

Rat blowup_valuation(const SparsePoly& eq, const BlowupAssignment& assign, Int r) {
  if (eq.empty()) fail(Err::EmptyPolynomial, "valuation of the zero polynomial");
  bool first = true;
  Int best = 0;
  for (const auto& [e, c] : eq.terms()) {
    Int s = weighted_sum(e, assign.w);
    if (first || s < best) best = s;
    first = false;
  }
  return Rat(best, r);
}

SparsePoly proper_transform(const SparsePoly& eq, const BlowupAssignment& assign, const Rat& m,
                            Int r) {
  if (eq.empty()) fail(Err::EmptyPolynomial, "transform of the zero polynomial");
  if (m != blowup_valuation(eq, assign, r))
    fail(Err::NonIntegralExponent, "m is not the valuation of the equation");
  Rat smin = m * r;
  if (smin.denominator() != 1) fail(Err::NonIntegralExponent, "non-integer scaled valuation");
  SparsePoly out(eq.arity() + 1);
  for (const auto& [e, c] : eq.terms()) {
    Int diff = weighted_sum(e, assign.w) - smin.numerator();
    if (diff % r != 0)
      fail(Err::NonIntegralExponent,
           "monomial valuation differs from the minimum by a non-multiple of r (inconsistent assignment)");
    Expo f(eq.arity() + 1, 0);
    f[0] = static_cast<int>(diff / r);
    for (int i = 0; i < eq.arity(); ++i) f[i + 1] = e[i];
    out.add_term(f, c);
  }
  return out;
}

bool is_terminal_cyclic(Int r, Int a) {
  if (r < 2) return true;
  return gcd_ll(((a % r) + r) % r, r) == 1;
}

bool is_terminal_quotient(Int r, Int w1, Int w2, Int w3) {
  if (r <= 1) return true;
  auto norm = [&](Int w) { return ((w % r) + r) % r; };
  Int a = norm(w1), b = norm(w2), c = norm(w3);
  if (gcd_ll(a, r) != 1 || gcd_ll(b, r) != 1 || gcd_ll(c, r) != 1) return false;
  return (a + b) % r == 0 || (a + c) % r == 0 || (b + c) % r == 0;
}

namespace {

// Tangent weights by monotone iteration from the congruence lower bounds:
// alpha_eq = r * (min valuation over monomials free of that equation's
// tangent variable). The tangent monomial itself then attains the minimum.
BlowupAssignment resolve_assignment(const AmbientFamily& fam, const std::vector<int>& tangents) {
  int n = static_cast<int>(fam.names.size());
  Int r = fam.point.r;
  BlowupAssignment assign;
  assign.w.assign(n, 0);
  std::vector<bool> is_tangent(n, false);
  for (int eqi = 0; eqi < static_cast<int>(fam.eqs.size()); ++eqi) is_tangent[tangents[eqi]] = true;

  std::vector<Int> residues;
  for (int i = 0; i < n; ++i) {
    if (i == fam.point.var) {
      assign.w[i] = 0;
      continue;
    }
    Int red = ((fam.ambient_weights[i] % r) + r) % r;
    if (is_tangent[i]) {
      assign.w[i] = red == 0 ? r : red;  // lower bound, raised below
    } else {
      if (red == 0)
        fail(Err::NeedsLocalWeights,
             "variable " + fam.names[i] + " has weight divisible by r; supply overrides.local_weights");
      assign.w[i] = red;
      residues.push_back(red);
    }
  }

  std::vector<Int> germ = {1, fam.point.a, fam.point.r - fam.point.a};
  std::sort(germ.begin(), germ.end());
  std::sort(residues.begin(), residues.end());
  if (residues != germ)
    fail(Err::GermMismatch, "residue weights do not present the germ 1/r(1,a,r-a)");

  for (int round = 0; round < 32; ++round) {
    bool changed = false;
    for (int eqi = 0; eqi < static_cast<int>(fam.eqs.size()); ++eqi) {
      int v = tangents[eqi];
      Int best = -1;
      for (const auto& [e, c] : fam.eqs[eqi].terms()) {
        if (e[v] > 0) continue;
        Int s = weighted_sum(e, assign.w);
        if (best < 0 || s < best) best = s;
      }
      if (best < 0)
        fail(Err::NoTangentMonomial,
             "equation " + std::to_string(eqi) + " has no monomial free of its tangent variable");
      if (assign.w[v] != best) {
        Int red = ((fam.ambient_weights[v] % r) + r) % r;
        if ((best - red) % r != 0)
          fail(Err::NonIntegralResult, "tangent weight for " + fam.names[v] +
                                           " breaks the congruence alpha = a mod r");
        assign.w[v] = best;
        changed = true;
      }
    }
    if (!changed) return assign;
  }
  fail(Err::NonIntegralResult, "tangent weights do not stabilize");
}

}  // namespace

Model kawamata_grading(const AmbientFamily& fam) {
  int n = static_cast<int>(fam.names.size());
  Int r = fam.point.r;
  if (fam.point.var < 0 || fam.point.var >= n) fail(Err::SchemaError, "singular point variable");
  if (r < 2 || fam.point.a <= 0 || fam.point.a >= r || gcd_ll(fam.point.a, r) != 1)
    fail(Err::SchemaError, "germ 1/r(1,a,r-a) needs r >= 2, 0 < a < r, gcd(a,r) = 1");

  std::vector<int> tangents(fam.eqs.size(), -1);
  if (!fam.local_weights) {
    for (size_t eqi = 0; eqi < fam.eqs.size(); ++eqi) {
      std::optional<int> designated;
      if (auto it = fam.tangent.find(static_cast<int>(eqi)); it != fam.tangent.end())
        designated = it->second;
      tangents[eqi] = find_tangent_variable(fam.eqs[eqi], fam.point, designated);
    }
  }

  BlowupAssignment assign;
  if (fam.local_weights) {
    assign.w = *fam.local_weights;
    if (static_cast<int>(assign.w.size()) != n) fail(Err::SchemaError, "local_weights arity");
    bool has_zero = false;
    for (int i = 0; i < n; ++i) {
      if (((assign.w[i] - fam.ambient_weights[i]) % r + r) % r != 0)
        fail(Err::NonIntegralResult,
             "override weight for " + fam.names[i] + " breaks the congruence mod r");
      has_zero = has_zero || assign.w[i] == 0;
    }
    if (!has_zero) fail(Err::NonIntegralResult, "override row has no nonvanishing coordinate");
  } else {
    assign = resolve_assignment(fam, tangents);
    // Lemma-alpha consistency: the full minimum must equal the tangent-free
    // minimum; a lower tangent monomial would make the exceptional divisor
    // reducible.
    for (size_t eqi = 0; eqi < fam.eqs.size(); ++eqi) {
      Rat full = blowup_valuation(fam.eqs[eqi], assign, r);
      if (full * r != Rat(assign.w[tangents[eqi]]))
        fail(Err::ReducibleExceptional,
             "equation " + std::to_string(eqi) + " has a tangent monomial below the tangent-free minimum");
    }
  }

  Model model;
  model.valuations.reserve(fam.eqs.size());
  for (const auto& eq : fam.eqs) model.valuations.push_back(blowup_valuation(eq, assign, r));

  std::array<std::vector<Int>, 2> rows;
  rows[0].push_back(0);
  rows[1].push_back(-r);
  for (int i = 0; i < n; ++i) {
    rows[0].push_back(fam.ambient_weights[i]);
    rows[1].push_back(assign.w[i]);
  }
  auto normalized = normalize_stack_grading(rows, r);
  model.stacky_row = rows[1];

  std::vector<VarDecl> vars;
  vars.push_back({"u", Weight{normalized[0][0], normalized[1][0]}});
  for (int i = 0; i < n; ++i)
    vars.push_back({fam.names[i], Weight{normalized[0][i + 1], normalized[1][i + 1]}});
  std::vector<int> left = {0, fam.point.var + 1};
  std::vector<int> right;
  for (int i = 0; i < n; ++i)
    if (i != fam.point.var) right.push_back(i + 1);
  model.cox = CoxData(vars, left, right);

  for (size_t eqi = 0; eqi < fam.eqs.size(); ++eqi)
    model.eqs.push_back(proper_transform(fam.eqs[eqi], assign, model.valuations[eqi], r));

  model.exceptional = model.cox.vars[0].deg;
  model.minus_KY = adjunction_class(model.cox, model.equation_degrees());
  return model;
}

}  // namespace tworay
