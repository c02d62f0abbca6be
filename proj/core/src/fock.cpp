#include "relrep/fock.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "relrep/error.hpp"
#include "relrep/su2.hpp"

namespace relrep {

namespace {

// --- mode keys -------------------------------------------------------------

int label_kind(const Mode& m) { return m.is_symbolic() ? 0 : 1; }

// three-way compare; modes are identified by (species, label, sigma)
int mode_cmp(const Mode& a, const Mode& b) {
  if (int c = a.species.name.compare(b.species.name)) return c < 0 ? -1 : 1;
  if (label_kind(a) != label_kind(b)) return label_kind(a) < label_kind(b) ? -1 : 1;
  if (a.is_symbolic()) {
    if (int c = std::get<std::string>(a.label).compare(std::get<std::string>(b.label)))
      return c < 0 ? -1 : 1;
  } else {
    const FourVector& pa = std::get<FourVector>(a.label);
    const FourVector& pb = std::get<FourVector>(b.label);
    for (int mu = 0; mu < 4; ++mu) {
      if (pa[mu] < pb[mu]) return -1;
      if (pa[mu] > pb[mu]) return 1;
    }
  }
  if (a.sigma != b.sigma) return a.sigma < b.sigma ? -1 : 1;
  return 0;
}

enum class DeltaValue { Zero, One, Formal };

// delta(a, b): 0/1 when both labels are numeric, formal otherwise; the
// discrete labels (species, sigma) always compare exactly.
DeltaValue delta_eval(const Mode& a, const Mode& b, double tol) {
  if (a.species.name != b.species.name || a.sigma != b.sigma) return DeltaValue::Zero;
  if (!a.is_symbolic() && !b.is_symbolic()) {
    const FourVector& pa = std::get<FourVector>(a.label);
    const FourVector& pb = std::get<FourVector>(b.label);
    const double scale = std::max(1.0, std::max(pa.max_abs(), pb.max_abs()));
    return (pa - pb).max_abs() <= tol * scale ? DeltaValue::One : DeltaValue::Zero;
  }
  return DeltaValue::Formal;
}

int delta_cmp(const DeltaFactor& a, const DeltaFactor& b) {
  if (int c = mode_cmp(a.first, b.first)) return c;
  return mode_cmp(a.second, b.second);
}

// --- raw words and the rewriting engine -------------------------------------

struct RawOp {
  bool create;
  Mode mode;
};

struct RawTerm {
  Complex coeff{1.0, 0.0};
  std::vector<DeltaFactor> deltas;
  std::vector<RawOp> ops;
};

int op_cmp(const RawOp& a, const RawOp& b) {
  if (a.create != b.create) return a.create ? -1 : 1;  // creators first
  return mode_cmp(a.mode, b.mode);
}

// Sorts one block of ops (all creators or all annihilators) tracking the
// Fermi sign; returns false if two identical fermionic ops collide.
bool sort_block(std::vector<Mode>& block, int& sign) {
  for (std::size_t i = 1; i < block.size(); ++i) {
    for (std::size_t k = i; k > 0; --k) {
      const int c = mode_cmp(block[k - 1], block[k]);
      if (c < 0) break;
      const bool both_fermi = block[k - 1].fermionic() && block[k].fermionic();
      if (c == 0 && both_fermi) return false;  // a^2 = 0 for fermions
      if (c == 0) break;
      if (both_fermi) sign = -sign;
      std::swap(block[k - 1], block[k]);
    }
  }
  return true;
}

struct MonomialKey {
  std::vector<DeltaFactor> deltas;
  std::vector<Mode> creators;
  std::vector<Mode> annihilators;

  bool operator<(const MonomialKey& o) const {
    auto cmp_modes = [](const std::vector<Mode>& x, const std::vector<Mode>& y) {
      for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i)
        if (int c = mode_cmp(x[i], y[i])) return c;
      return x.size() == y.size() ? 0 : (x.size() < y.size() ? -1 : 1);
    };
    if (int c = cmp_modes(creators, o.creators)) return c < 0;
    if (int c = cmp_modes(annihilators, o.annihilators)) return c < 0;
    for (std::size_t i = 0; i < std::min(deltas.size(), o.deltas.size()); ++i)
      if (int c = delta_cmp(deltas[i], o.deltas[i])) return c < 0;
    return deltas.size() < o.deltas.size();
  }
};

// Terminal step: the word has all creators to the left; sort the blocks,
// kill fermionic squares, and merge into the accumulator.
void emit(RawTerm&& term, std::map<MonomialKey, Complex>& acc) {
  MonomialKey key;
  for (auto& op : term.ops)
    (op.create ? key.creators : key.annihilators).push_back(std::move(op.mode));
  int sign = 1;
  if (!sort_block(key.creators, sign)) return;
  if (!sort_block(key.annihilators, sign)) return;
  std::sort(term.deltas.begin(), term.deltas.end(),
            [](const DeltaFactor& a, const DeltaFactor& b) { return delta_cmp(a, b) < 0; });
  key.deltas = std::move(term.deltas);
  acc[std::move(key)] += double(sign) * term.coeff;
}

OperatorSum normal_order_raw(std::vector<RawTerm> work, double tol) {
  std::map<MonomialKey, Complex> acc;
  while (!work.empty()) {
    RawTerm term = std::move(work.back());
    work.pop_back();
    if (term.coeff == Complex(0.0, 0.0)) continue;

    // Find the leftmost annihilator-creator adjacency.
    std::size_t i = 0;
    for (; i + 1 < term.ops.size(); ++i)
      if (!term.ops[i].create && term.ops[i + 1].create) break;

    if (i + 1 >= term.ops.size()) {
      emit(std::move(term), acc);
      continue;
    }

    const Mode lhs = term.ops[i].mode;      // annihilator
    const Mode rhs = term.ops[i + 1].mode;  // creator

    // Contraction a(q') a^dag(q) -> delta(q', q) (same species only).
    if (lhs.species.name == rhs.species.name) {
      switch (delta_eval(lhs, rhs, tol)) {
        case DeltaValue::Zero:
          break;
        case DeltaValue::One: {
          RawTerm contracted = term;
          contracted.ops.erase(contracted.ops.begin() + i, contracted.ops.begin() + i + 2);
          work.push_back(std::move(contracted));
          break;
        }
        case DeltaValue::Formal: {
          RawTerm contracted = term;
          contracted.ops.erase(contracted.ops.begin() + i, contracted.ops.begin() + i + 2);
          contracted.deltas.emplace_back(lhs, rhs);
          work.push_back(std::move(contracted));
          break;
        }
      }
    }

    // Transposition (anti)commuting the pair.
    if (lhs.fermionic() && rhs.fermionic()) term.coeff = -term.coeff;
    std::swap(term.ops[i], term.ops[i + 1]);
    work.push_back(std::move(term));
  }

  OperatorSum out;
  for (auto& [key, coeff] : acc) {
    if (coeff == Complex(0.0, 0.0)) continue;
    out.terms.push_back({coeff, key.deltas, key.creators, key.annihilators});
  }
  return out;
}

std::vector<RawTerm> to_raw(const OperatorSum& e) {
  std::vector<RawTerm> raw;
  raw.reserve(e.terms.size());
  for (const auto& t : e.terms) {
    RawTerm r;
    r.coeff = t.coeff;
    r.deltas = t.deltas;
    for (const auto& m : t.creators) r.ops.push_back({true, m});
    for (const auto& m : t.annihilators) r.ops.push_back({false, m});
    raw.push_back(std::move(r));
  }
  return raw;
}

std::string label_string(const Mode& m) {
  if (m.is_symbolic()) return std::get<std::string>(m.label);
  return to_string(std::get<FourVector>(m.label));
}

}  // namespace

// --- modes and states --------------------------------------------------------

Mode Mode::symbolic(const SpeciesDescriptor& species, std::string name, HalfInt sigma) {
  validate(species);
  if (name.empty()) throw ParseError("mode: empty symbolic name");
  return Mode{species, std::move(name), sigma};
}

Mode Mode::numeric(const SpeciesDescriptor& species, const FourVector& p, HalfInt sigma) {
  validate(Ket{p, sigma, species});
  return Mode{species, p, sigma};
}

bool mode_less(const Mode& a, const Mode& b) { return mode_cmp(a, b) < 0; }
bool mode_equal(const Mode& a, const Mode& b) { return mode_cmp(a, b) == 0; }

std::string to_string(const Mode& m) {
  std::string s = m.species.name + ":" + label_string(m);
  if (m.sigma != HalfInt(0)) s += ":" + to_string(m.sigma);
  return s;
}

DeltaFactor::DeltaFactor(Mode a, Mode b) : first(std::move(a)), second(std::move(b)) {
  if (mode_cmp(second, first) < 0) std::swap(first, second);
}

std::string to_string(const DeltaFactor& d) {
  return "delta(" + to_string(d.first) + "," + to_string(d.second) + ")";
}

std::string to_string(const FockState& s) {
  std::string out = "Phi[";
  for (std::size_t i = 0; i < s.modes.size(); ++i) {
    if (i) out += "; ";
    out += to_string(s.modes[i]);
  }
  return out + "]";
}

FockState apply_creator(const Mode& q, const FockState& s) {
  FockState out;
  out.modes.reserve(s.size() + 1);
  out.modes.push_back(q);
  out.modes.insert(out.modes.end(), s.modes.begin(), s.modes.end());
  return out;
}

StateSum apply_annihilator(const Mode& q, const FockState& s, double tol) {
  StateSum out;
  double sign = 1.0;
  for (std::size_t r = 0; r < s.modes.size(); ++r) {
    const Mode& target = s.modes[r];
    const DeltaValue d = delta_eval(q, target, tol);
    if (d != DeltaValue::Zero) {
      WeightedState w;
      w.coeff = sign;
      if (d == DeltaValue::Formal) w.deltas.emplace_back(q, target);
      w.state.modes = s.modes;
      w.state.modes.erase(w.state.modes.begin() + r);
      out.push_back(std::move(w));
    }
    if (q.fermionic() && target.fermionic()) sign = -sign;
  }
  return out;
}

// --- operator sums -----------------------------------------------------------

std::string to_string(const OperatorMonomial& m) {
  std::ostringstream out;
  out.precision(17);
  out << "(" << m.coeff.real() << (m.coeff.imag() < 0 ? "" : "+") << m.coeff.imag() << "i)";
  for (const auto& d : m.deltas) out << " " << to_string(d);
  for (const auto& c : m.creators) out << " ad(" << to_string(c) << ")";
  for (const auto& a : m.annihilators) out << " a(" << to_string(a) << ")";
  return out.str();
}

std::string to_string(const OperatorSum& s) {
  if (s.zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    if (i) out += " + ";
    out += to_string(s.terms[i]);
  }
  return out;
}

OperatorSum creator(const Mode& q) {
  OperatorSum e;
  e.terms.push_back({Complex(1.0, 0.0), {}, {q}, {}});
  return e;
}

OperatorSum annihilator(const Mode& q) {
  OperatorSum e;
  e.terms.push_back({Complex(1.0, 0.0), {}, {}, {q}});
  return e;
}

OperatorSum delta_term(const Mode& a, const Mode& b, double tol) {
  OperatorSum e;
  switch (delta_eval(a, b, tol)) {
    case DeltaValue::Zero:
      break;
    case DeltaValue::One:
      e.terms.push_back({Complex(1.0, 0.0), {}, {}, {}});
      break;
    case DeltaValue::Formal:
      e.terms.push_back({Complex(1.0, 0.0), {DeltaFactor(a, b)}, {}, {}});
      break;
  }
  return e;
}

OperatorSum operator+(const OperatorSum& a, const OperatorSum& b) {
  auto raw = to_raw(a);
  auto rb = to_raw(b);
  raw.insert(raw.end(), rb.begin(), rb.end());
  return normal_order_raw(std::move(raw), 1e-8);
}

OperatorSum operator-(const OperatorSum& a, const OperatorSum& b) {
  return a + Complex(-1.0, 0.0) * b;
}

OperatorSum operator*(const Complex& c, const OperatorSum& a) {
  auto raw = to_raw(a);
  for (auto& t : raw) t.coeff *= c;
  return normal_order_raw(std::move(raw), 1e-8);
}

OperatorSum operator*(const OperatorSum& a, const OperatorSum& b) {
  std::vector<RawTerm> raw;
  for (const auto& ta : to_raw(a)) {
    for (const auto& tb : to_raw(b)) {
      RawTerm r;
      r.coeff = ta.coeff * tb.coeff;
      r.deltas = ta.deltas;
      r.deltas.insert(r.deltas.end(), tb.deltas.begin(), tb.deltas.end());
      r.ops = ta.ops;
      r.ops.insert(r.ops.end(), tb.ops.begin(), tb.ops.end());
      raw.push_back(std::move(r));
    }
  }
  return normal_order_raw(std::move(raw), 1e-8);
}

OperatorSum normal_order(const OperatorSum& e) { return normal_order_raw(to_raw(e), 1e-8); }

OperatorSum adjoint(const OperatorSum& e) {
  std::vector<RawTerm> raw;
  for (const auto& t : e.terms) {
    RawTerm r;
    r.coeff = std::conj(t.coeff);
    r.deltas = t.deltas;
    for (auto it = t.annihilators.rbegin(); it != t.annihilators.rend(); ++it)
      r.ops.push_back({true, *it});
    for (auto it = t.creators.rbegin(); it != t.creators.rend(); ++it)
      r.ops.push_back({false, *it});
    raw.push_back(std::move(r));
  }
  return normal_order_raw(std::move(raw), 1e-8);
}

OperatorSum inner_product(const FockState& s1, const FockState& s2, double tol) {
  OperatorSum out;
  if (s1.size() != s2.size()) return out;

  bool any_fermi = false, any_bose = false;
  for (const auto* s : {&s1, &s2})
    for (const auto& m : s->modes) (m.fermionic() ? any_fermi : any_bose) = true;
  if (any_fermi && any_bose)
    throw NumericError("inner_product: states mix Bose and Fermi modes");

  const std::size_t n = s1.size();
  std::vector<RawTerm> raw;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    RawTerm r;
    if (any_fermi) {
      int inversions = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k) inversions += perm[i] > perm[k];
      r.coeff = inversions % 2 ? -1.0 : 1.0;
    }
    bool dead = false;
    for (std::size_t i = 0; i < n && !dead; ++i) {
      switch (delta_eval(s1.modes[i], s2.modes[perm[i]], tol)) {
        case DeltaValue::Zero: dead = true; break;
        case DeltaValue::One: break;
        case DeltaValue::Formal:
          r.deltas.emplace_back(s1.modes[i], s2.modes[perm[i]]);
          break;
      }
    }
    if (!dead) raw.push_back(std::move(r));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return normal_order_raw(std::move(raw), tol);
}

Complex scalar_value(const OperatorSum& e) {
  Complex total(0.0, 0.0);
  for (const auto& t : e.terms) {
    if (!t.creators.empty() || !t.annihilators.empty() || !t.deltas.empty())
      throw NumericError("scalar_value: operator content or formal deltas remain");
    total += t.coeff;
  }
  return total;
}

StateSum apply(const OperatorSum& e, const FockState& s, double tol) {
  StateSum out;
  for (const auto& t : e.terms) {
    StateSum branch = {{t.coeff, t.deltas, s}};
    for (auto it = t.annihilators.rbegin(); it != t.annihilators.rend(); ++it) {
      StateSum next;
      for (const auto& w : branch) {
        for (auto piece : apply_annihilator(*it, w.state, tol)) {
          piece.coeff *= w.coeff;
          piece.deltas.insert(piece.deltas.end(), w.deltas.begin(), w.deltas.end());
          next.push_back(std::move(piece));
        }
      }
      branch = std::move(next);
    }
    for (auto& w : branch)
      for (auto it = t.creators.rbegin(); it != t.creators.rend(); ++it)
        w.state = apply_creator(*it, w.state);
    out.insert(out.end(), branch.begin(), branch.end());
  }
  return out;
}

OperatorSum vacuum_expectation(const OperatorSum& e) {
  OperatorSum out;
  for (const auto& t : e.terms)
    if (t.creators.empty() && t.annihilators.empty()) out.terms.push_back(t);
  return out;
}

OperatorSum transform_creator(const Mode& q, const Matrix2& lambda, const FourVector& a,
                              double tol) {
  if (q.is_symbolic())
    throw NumericError("transform_creator: symbolic modes have no Lorentz action");
  const SpeciesDescriptor& sp = q.species;
  const FourVector p = std::get<FourVector>(q.label);
  const FourVector pl = apply(covering(lambda), p);
  const Complex phase = std::exp(Complex(0, -minkowski_dot(pl, a)));
  const double dilation = std::sqrt(pl.t / p.t);
  const Matrix2 w = wigner_rotation(lambda, p, sp.mass, tol);

  std::vector<RawTerm> raw;
  if (sp.massless()) {
    const double theta = massless_params(w, std::max(tol, 1e-7)).theta;
    RawTerm r;
    r.coeff = phase * dilation * std::exp(Complex(0, theta * q.sigma.value()));
    r.ops.push_back({true, Mode::numeric(sp, pl, q.sigma)});
    raw.push_back(std::move(r));
  } else {
    const HalfInt j = sp.spin_or_helicity;
    const Matrix d = wigner_D(j, w, std::max(tol, 1e-8));
    const int col = weight_index(j, q.sigma);
    for (int row = 0; row < d.rows(); ++row) {
      RawTerm r;
      r.coeff = phase * dilation * d(row, col);
      r.ops.push_back({true, Mode::numeric(sp, pl, HalfInt::from_twice(j.twice() - 2 * row))});
      raw.push_back(std::move(r));
    }
  }
  return normal_order_raw(std::move(raw), tol);
}

}  // namespace relrep
