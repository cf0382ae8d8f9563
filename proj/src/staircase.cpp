#include "escalier/staircase.hpp"

#include <algorithm>
#include <map>
#include <set>

#ifdef ESCALIER_HAVE_OPENMP
#include <omp.h>
#endif

namespace escalier {

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Corner: return "corner";
    case CaseTag::Border: return "border";
    case CaseTag::Interior: return "interior";
  }
  return "?";
}

namespace {

Term diagonal(std::size_t k, Exponent j) { return Term(std::vector<Exponent>(k, j)); }

void sort_graded(std::vector<Term>& ts) {
  if (ts.empty()) return;
  TermOrder deglex(OrderKind::DegLex, ts.front().nvars());
  std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) { return deglex.less(a, b); });
}

// Membership through the oracle with a per-session memo: each distinct term
// costs one ledger query, and the canonical forms are kept for the basis.
class Session {
 public:
  explicit Session(CanOracle& o) : o_(o) {}

  const Polynomial& can(const Term& t) {
    auto it = cache_.find(t);
    if (it == cache_.end()) it = cache_.emplace(t, o_.can_term(t)).first;
    return it->second;
  }
  bool member(const Term& t) { return !(can(t) == Polynomial::monomial(t, 1, o_.field())); }

 private:
  CanOracle& o_;
  std::map<Term, Polynomial> cache_;
};

class Walk2 {
 public:
  Walk2(const MembershipProbe& in_S, Exponent D, SearchMode mode) : in_S_(in_S), D_(D), mode_(mode) {}

  std::vector<Term> run() {
    Exponent j = 0;
    for (Exponent i = 1; i <= D_; ++i)
      if (m(i, i)) {
        j = i;
        break;
      }
    if (j == 0) return {};
    if (j == 1 && m(0, 0)) return {Term{0, 0}};

    const bool left = m(j - 1, j);
    const bool right = m(j, j - 1);
    if (!left && !right) {
      emit(j, j);
      walk_up_left(j, j);
      walk_down_right(j, j);
    } else if (!left && right) {
      Exponent beta = lowest_in_col(j, j - 1);
      emit(j, beta);
      walk_down_right(j, beta);
      walk_up_left(j, j);
    } else if (left && !right) {
      Exponent alpha = lowest_in_row(j, j - 1);
      emit(alpha, j);
      walk_up_left(alpha, j);
      walk_down_right(j, j);
    } else {
      Exponent beta = lowest_in_col(j, j - 1);
      Exponent alpha = lowest_in_row(j, j - 1);
      emit(j, beta);
      emit(alpha, j);
      walk_down_right(j, beta);
      walk_up_left(alpha, j);
    }
    return {out_.begin(), out_.end()};
  }

 private:
  bool m(Exponent x, Exponent y) { return in_S_(Term{x, y}); }
  void emit(Exponent x, Exponent y) { out_.insert(Term{x, y}); }

  // smallest y <= top with (x, y) in S, given (x, top) in S
  Exponent lowest_in_col(Exponent x, Exponent top) {
    return lowest(top, [&](Exponent y) { return m(x, y); });
  }
  Exponent lowest_in_row(Exponent y, Exponent top) {
    return lowest(top, [&](Exponent x) { return m(x, y); });
  }

  template <class F>
  Exponent lowest(Exponent top, F&& hit) {
    if (mode_ == SearchMode::Binary) {
      Exponent lo = 0, hi = top;  // hit(hi) holds
      while (lo < hi) {
        Exponent mid = lo + (hi - lo) / 2;
        if (hit(mid))
          hi = mid;
        else
          lo = mid + 1;
      }
      return hi;
    }
    Exponent v = top;
    while (v > 0 && hit(v - 1)) --v;
    return v;
  }

  // (a, b) in S with (a, b-1) not in S: next generators to the right
  void walk_down_right(Exponent a, Exponent b) {
    while (b > 0) {
      std::optional<Exponent> next;
      for (Exponent x = a + 1; x <= D_; ++x)
        if (m(x, b - 1)) {
          next = x;
          break;
        }
      if (!next) return;
      Exponent nb = lowest_in_col(*next, b - 1);
      emit(*next, nb);
      a = *next;
      b = nb;
    }
  }

  // (a, b) in S with (a-1, b) not in S: next generators upward
  void walk_up_left(Exponent a, Exponent b) {
    while (a > 0) {
      std::optional<Exponent> next;
      for (Exponent y = b + 1; y <= D_; ++y)
        if (m(a - 1, y)) {
          next = y;
          break;
        }
      if (!next) return;
      Exponent na = lowest_in_row(*next, a - 1);
      emit(na, *next);
      a = na;
      b = *next;
    }
  }

  const MembershipProbe& in_S_;
  Exponent D_;
  SearchMode mode_;
  std::set<Term> out_;
};

Term lift(const Term& s, Exponent h) {
  std::vector<Exponent> e = s.exponents();
  e.push_back(h);
  return Term(std::move(e));
}

bool divided_by_any(const std::vector<Term>& gens, const Term& t) {
  return std::any_of(gens.begin(), gens.end(), [&](const Term& g) { return divides(g, t); });
}

std::vector<Term> slice_generators(const MembershipProbe& in_S, std::size_t k, Exponent D, const StaircaseOptions& opts) {
  // S_h: the slice X_k = h, a (k-1)-variable upward-closed set
  auto slice = [&](Exponent h) {
    return staircase_generators([&, h](const Term& s) { return in_S(lift(s, h)); }, k - 1, D, opts);
  };

  Exponent L = 0;
  for (Exponent i = 1; i <= D; ++i)
    if (in_S(diagonal(k, i))) {
      L = i;
      break;
    }
  if (L == 0) return {};
  if (L == 1 && in_S(Term(k))) return {Term(k)};

  std::set<Term> out;
  const std::vector<Term> at_L = slice(L);

  // Downward: a slice generator sigma at level h is a generator of S iff
  // sigma * X_k^(h-1) is not in S. When no generator drops out the slice
  // below is the same set and is not recomputed.
  std::vector<Term> cur = at_L;
  for (Exponent level = L;; --level) {
    if (cur.empty()) break;
    if (level == 0) {
      for (const auto& s : cur) out.insert(lift(s, 0));
      break;
    }
    bool changed = false;
    for (const auto& s : cur)
      if (!in_S(lift(s, level - 1))) {
        out.insert(lift(s, level));
        changed = true;
      }
    if (changed) cur = slice(level - 1);
  }

  // Upward: every slice above L, new generators are those not covered by
  // the slice below.
  std::vector<Term> prev = at_L;
  for (Exponent h = L + 1; h <= D; ++h) {
    if (std::any_of(prev.begin(), prev.end(), [](const Term& t) { return t.is_one(); })) break;
    std::vector<Term> cur_h = slice(h);
    for (const auto& s : cur_h)
      if (!divided_by_any(prev, s)) out.insert(lift(s, h));
    prev = std::move(cur_h);
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<Term> staircase_generators(const MembershipProbe& in_S, std::size_t k, Exponent D,
                                       const StaircaseOptions& opts) {
  if (k == 0) throw MathError("staircase needs at least one variable");
  if (D == 0) return in_S(Term(k)) ? std::vector<Term>{Term(k)} : std::vector<Term>{};
  if (k == 1) {
    for (Exponent a = 0; a <= D; ++a)
      if (in_S(Term{a})) return {Term{a}};
    return {};
  }
  if (k == 2) return Walk2(in_S, D, opts.search).run();
  return slice_generators(in_S, k, D, opts);
}

ProbeOutcome diagonal_probe(CanOracle& o, std::size_t nvars, Exponent D) {
  if (D < 1) throw MathError("diagonal probe needs D >= 1");
  for (Exponent j = 1; j <= D; ++j)
    if (o.member_T(diagonal(nvars, j))) return {j};
  return {};
}

CaseTag classify(CanOracle& o, const Term& t) {
  if (!o.member_T(t)) throw MathError("classify: " + to_string(t) + " is not in T(I)");
  std::size_t in = 0, present = 0;
  for (std::size_t i = 0; i < t.nvars(); ++i) {
    auto p = predecessor(t, i);
    if (!p) continue;
    ++present;
    if (o.member_T(*p)) ++in;
  }
  if (in == 0) return CaseTag::Corner;
  if (in == present) return CaseTag::Interior;
  return CaseTag::Border;
}

std::vector<Term> reconstruct_2var(CanOracle& o, Exponent D, const StaircaseOptions& opts) {
  if (o.nvars() != 2) throw MathError("reconstruct_2var needs a two-variable oracle");
  Session s(o);
  auto gens = Walk2([&](const Term& t) { return s.member(t); }, D, opts.search).run();
  sort_graded(gens);
  return gens;
}

StaircaseResult reconstruct(CanOracle& o, std::size_t nvars, Exponent D, const StaircaseOptions& opts) {
  if (o.nvars() != nvars) throw MathError("reconstruct: oracle has " + std::to_string(o.nvars()) + " variables");
  const std::size_t before = o.query_count();
  Session s(o);
  StaircaseResult r;
  r.bound = D;
  r.generators = staircase_generators([&](const Term& t) { return s.member(t); }, nvars, D, opts);
  sort_graded(r.generators);
  for (const auto& t : r.generators) r.reduced_basis.push_back(Polynomial::monomial(t, 1, o.field()) - s.can(t));
  r.queries_used = o.query_count() - before;
  return r;
}

std::vector<Term> minimal_elements(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  std::vector<Term> out;
  for (auto& t : terms)
    if (!divided_by_any(out, t)) out.push_back(std::move(t));
  sort_graded(out);
  return out;
}

namespace {

std::vector<Term> minimal_members(const std::vector<Term>& box, const std::vector<char>& member) {
  std::set<Term> in;
  for (std::size_t i = 0; i < box.size(); ++i)
    if (member[i]) in.insert(box[i]);
  std::vector<Term> out;
  for (const auto& t : in) {
    bool minimal = true;
    for (std::size_t v = 0; v < t.nvars() && minimal; ++v) {
      auto p = predecessor(t, v);
      if (p && in.count(*p)) minimal = false;
    }
    if (minimal) out.push_back(t);
  }
  sort_graded(out);
  return out;
}

}  // namespace

std::vector<Term> brute_force_generators(CanOracle& o, std::size_t nvars, Exponent D) {
  auto box = box_enumerate(Box{nvars, D});
  std::vector<char> member(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) member[i] = o.member_T(box[i]);
  return minimal_members(box, member);
}

std::vector<Term> brute_force_generators_parallel(CanOracle& o, std::size_t nvars, Exponent D) {
  auto box = box_enumerate(Box{nvars, D});
  std::vector<char> member(box.size());
  const auto count = static_cast<std::ptrdiff_t>(box.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) member[i] = o.member_T(box[i]);
  return minimal_members(box, member);
}

}  // namespace escalier
