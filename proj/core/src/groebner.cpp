#include "quiverhh/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace quiverhh {

namespace {

std::vector<TraceTerm> composed(const Path& left,
                                const std::vector<TraceTerm>& origin,
                                const Path& right, const Scalar& scale) {
  std::vector<TraceTerm> out;
  out.reserve(origin.size());
  for (const TraceTerm& t : origin) {
    auto l = compose(left, t.left);
    auto r = compose(t.right, right);
    if (!l || !r) throw InvariantViolation("trace composition endpoint clash");
    out.push_back(TraceTerm{t.coeff * scale, *l, t.generator, *r});
  }
  return out;
}

struct ElementTraceStep {
  Scalar coeff;
  Path left;
  std::size_t element;
  Path right;
};

// Full reduction against a set of monic elements.  Deterministic: always
// rewrites the largest reducible term, using the first applicable element at
// its leftmost occurrence.
struct Reducer {
  const Quiver& quiver;
  const std::vector<GroebnerBasis::Element>& elements;
  const std::vector<char>* alive = nullptr;  // optional liveness mask

  bool element_alive(std::size_t i) const {
    return alive == nullptr || (*alive)[i];
  }

  PathVector reduce(PathVector x, std::vector<ElementTraceStep>* steps) const {
    for (;;) {
      // largest reducible term
      const Path* best = nullptr;
      std::size_t best_elem = 0;
      std::size_t best_pos = 0;
      for (const auto& [p, c] : x.terms()) {
        if (best && !term_greater(p, *best)) continue;
        for (std::size_t e = 0; e < elements.size(); ++e) {
          if (!element_alive(e)) continue;
          std::size_t pos = find_subword(p, elements[e].lead);
          if (pos != std::string::npos) {
            best = &p;
            best_elem = e;
            best_pos = pos;
            break;
          }
        }
      }
      if (!best) return x;
      Path term = *best;
      Scalar c = x.coefficient(term);
      const GroebnerBasis::Element& g = elements[best_elem];
      Path u = path_slice(quiver, term, 0, best_pos);
      Path v = path_slice(quiver, term, best_pos + g.lead.length(),
                          term.length());
      for (const auto& [w, d] : g.poly.terms()) {
        auto uw = compose(u, w);
        auto uwv = uw ? compose(*uw, v) : std::nullopt;
        if (!uwv) throw InvariantViolation("reduction endpoint clash");
        x.add_term(*uwv, -(c * d));
      }
      if (steps) steps->push_back({c, u, best_elem, v});
    }
  }
};

}  // namespace

PathVector expand_trace(const Field& f, const std::vector<TraceTerm>& trace,
                        const std::vector<PathVector>& generators) {
  PathVector acc(f);
  for (const TraceTerm& t : trace) {
    PathVector g = generators.at(t.generator).left_mul(t.left).right_mul(
        t.right);
    acc += g * t.coeff;
  }
  return acc;
}

bool GroebnerBasis::path_reducible(const Path& p) const {
  for (const Element& e : elements_)
    if (find_subword(p, e.lead) != std::string::npos) return true;
  return false;
}

std::vector<std::vector<Path>> GroebnerBasis::irreducible_levels(
    int max_len) const {
  std::vector<std::vector<Path>> levels;
  std::vector<Path> current;
  for (const Vertex& v : quiver_.vertices())
    current.push_back(Path::stationary(v.id));
  levels.push_back(current);
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const Path& p : current)
      for (ArrowId a : quiver_.arrows_from(p.target())) {
        std::vector<ArrowId> arrows = p.arrows();
        arrows.push_back(a);
        Path ext(p.is_stationary() ? quiver_.arrow(a).source : p.source(),
                 quiver_.arrow(a).target, std::move(arrows));
        // p is irreducible, so only suffixes ending at the new arrow matter
        bool reducible = false;
        for (const Element& e : elements_) {
          if (e.lead.length() > ext.length()) continue;
          if (subword_at(ext, e.lead, ext.length() - e.lead.length())) {
            reducible = true;
            break;
          }
        }
        if (!reducible) next.push_back(std::move(ext));
      }
    std::sort(next.begin(), next.end());
    levels.push_back(next);
    current = levels.back();
    if (current.empty()) break;
  }
  return levels;
}

namespace {

struct Obligation {
  int degree;
  std::size_t i, j;  // element indices
  std::size_t overlap;  // suffix of lead_i == prefix of lead_j, this long
};

struct ObligationOrder {
  bool operator()(const Obligation& a, const Obligation& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return a.overlap < b.overlap;
  }
};

}  // namespace

struct CompletionState {
  GroebnerBasis gb;
  std::vector<char> alive;
  std::set<Obligation, ObligationOrder> queue;

  const Quiver& quiver() const { return gb.quiver_; }

  void enqueue_overlaps(std::size_t idx) {
    const Path& lead_new = gb.elements_[idx].lead;
    for (std::size_t other = 0; other < gb.elements_.size(); ++other) {
      if (!alive[other]) continue;
      const Path& lead_old = gb.elements_[other].lead;
      add_pair_overlaps(idx, other, lead_new, lead_old);
      if (other != idx) add_pair_overlaps(other, idx, lead_old, lead_new);
    }
  }

  void add_pair_overlaps(std::size_t i, std::size_t j, const Path& li,
                         const Path& lj) {
    std::size_t max_k = std::min(li.length(), lj.length()) - 1;
    if (i == j) max_k = li.length() - 1;
    for (std::size_t k = 1; k <= max_k; ++k) {
      // suffix of li of length k vs prefix of lj of length k
      bool match = true;
      for (std::size_t t = 0; t < k; ++t)
        if (li.arrow(li.length() - k + t) != lj.arrow(t)) {
          match = false;
          break;
        }
      if (match)
        queue.insert(Obligation{
            static_cast<int>(li.length() + lj.length() - k), i, j, k});
    }
  }

  // Reduces, normalises and appends new elements; any existing element whose
  // lead a new lead divides is retired and re-inserted.
  void insert(PathVector poly, std::vector<TraceTerm> origin) {
    std::vector<std::pair<PathVector, std::vector<TraceTerm>>> pending;
    pending.emplace_back(std::move(poly), std::move(origin));
    while (!pending.empty()) {
      auto [p, o] = std::move(pending.back());
      pending.pop_back();
      Reducer red{quiver(), gb.elements_, &alive};
      std::vector<ElementTraceStep> steps;
      PathVector nf = red.reduce(std::move(p), &steps);
      for (const ElementTraceStep& s : steps) {
        auto extra =
            composed(s.left, gb.elements_[s.element].origin, s.right, -s.coeff);
        o.insert(o.end(), extra.begin(), extra.end());
      }
      if (nf.is_zero()) continue;
      auto lt = nf.leading_term();
      Scalar inv = lt->second.inverse();
      nf = nf * inv;
      for (TraceTerm& t : o) t.coeff *= inv;
      o = merge_trace(std::move(o));
      gb.elements_.push_back(
          GroebnerBasis::Element{std::move(nf), lt->first, std::move(o)});
      alive.push_back(1);
      std::size_t idx = gb.elements_.size() - 1;
      enqueue_overlaps(idx);
      for (std::size_t other = 0; other < idx; ++other) {
        if (!alive[other]) continue;
        if (find_subword(gb.elements_[other].lead, gb.elements_[idx].lead) !=
            std::string::npos) {
          alive[other] = 0;
          pending.emplace_back(gb.elements_[other].poly,
                               gb.elements_[other].origin);
        }
      }
    }
  }

  // Collapses duplicate (left, generator, right) summands.
  std::vector<TraceTerm> merge_trace(std::vector<TraceTerm> trace) const {
    std::map<std::tuple<int, Path, Path>, Scalar> acc;
    for (TraceTerm& t : trace) {
      auto key = std::make_tuple(t.generator, t.left, t.right);
      auto [it, fresh] = acc.emplace(key, t.coeff);
      if (!fresh) it->second += t.coeff;
    }
    std::vector<TraceTerm> out;
    for (auto& [key, c] : acc)
      if (!c.is_zero())
        out.push_back(
            TraceTerm{c, std::get<1>(key), std::get<0>(key), std::get<2>(key)});
    return out;
  }

  void process_up_to(int cap) {
    while (!queue.empty()) {
      Obligation ob = *queue.begin();
      if (ob.degree > cap) return;
      queue.erase(queue.begin());
      if (!alive[ob.i] || !alive[ob.j]) continue;
      const auto& gi = gb.elements_[ob.i];
      const auto& gj = gb.elements_[ob.j];
      Path right = path_slice(quiver(), gj.lead, ob.overlap, gj.lead.length());
      Path left =
          path_slice(quiver(), gi.lead, 0, gi.lead.length() - ob.overlap);
      // S = gi * right - left * gj  (both monic, leading words cancel)
      PathVector s = gi.poly.right_mul(right) - gj.poly.left_mul(left);
      std::vector<TraceTerm> origin =
          composed(Path::stationary(gi.poly.source()), gi.origin, right,
                   Scalar::one(gb.field_));
      auto neg = composed(left, gj.origin, Path::stationary(gj.poly.target()),
                          -Scalar::one(gb.field_));
      origin.insert(origin.end(), neg.begin(), neg.end());
      insert(std::move(s), std::move(origin));
    }
  }

  // Obligations between live elements still waiting in the queue.
  bool pending_live_obligations() const {
    for (const Obligation& ob : queue)
      if (alive[ob.i] && alive[ob.j]) return true;
    return false;
  }

  void finalize() {
    // tail-reduce each element against the others; leads stay fixed
    for (std::size_t e = 0; e < gb.elements_.size(); ++e) {
      if (!alive[e]) continue;
      std::vector<char> mask = alive;
      mask[e] = 0;
      Reducer red{quiver(), gb.elements_, &mask};
      std::vector<ElementTraceStep> steps;
      PathVector nf = red.reduce(gb.elements_[e].poly, &steps);
      if (steps.empty()) continue;
      std::vector<TraceTerm> origin = gb.elements_[e].origin;
      for (const ElementTraceStep& s : steps) {
        auto extra = composed(s.left, gb.elements_[s.element].origin, s.right,
                              -s.coeff);
        origin.insert(origin.end(), extra.begin(), extra.end());
      }
      gb.elements_[e].poly = std::move(nf);
      gb.elements_[e].origin = merge_trace(std::move(origin));
    }
    std::vector<GroebnerBasis::Element> kept;
    for (std::size_t e = 0; e < gb.elements_.size(); ++e)
      if (alive[e]) kept.push_back(std::move(gb.elements_[e]));
    std::sort(kept.begin(), kept.end(),
              [](const auto& a, const auto& b) { return a.lead < b.lead; });
    gb.elements_ = std::move(kept);
    alive.assign(gb.elements_.size(), 1);
  }
};

int default_max_degree(const BoundQuiverPresentation& pres) {
  std::size_t longest = 0;
  for (const PathVector& r : pres.relations)
    longest = std::max(longest, r.degree());
  return static_cast<int>(2 * longest + pres.quiver.num_vertices());
}

GroebnerBasis complete(const BoundQuiverPresentation& pres, int max_degree) {
  if (max_degree <= 0) max_degree = default_max_degree(pres);
  for (const PathVector& r : pres.relations) {
    if (static_cast<int>(r.degree()) > max_degree)
      throw SemanticError("max_degree below a relation length");
    if (!r.endpoint_homogeneous() || r.is_zero())
      throw SemanticError("relations must be nonzero and endpoint-homogeneous");
    for (const Path& p : r.support())
      if (p.length() < 2)
        throw SemanticError("relation path of length < 2: " +
                            p.str(pres.quiver));
  }

  CompletionState st;
  st.gb.field_ = pres.field;
  st.gb.quiver_ = pres.quiver;
  st.gb.generators_ = pres.relations;

  for (std::size_t g = 0; g < pres.relations.size(); ++g) {
    const PathVector& r = pres.relations[g];
    std::vector<TraceTerm> origin{
        TraceTerm{Scalar::one(pres.field), Path::stationary(r.source()),
                  static_cast<int>(g), Path::stationary(r.target())}};
    st.insert(r, std::move(origin));
  }

  int cap = max_degree;
  for (;;) {
    st.process_up_to(cap);
    auto levels = st.gb.irreducible_levels(max_degree);
    std::optional<int> cert;
    for (std::size_t L = 0; L < levels.size(); ++L)
      if (levels[L].empty()) {
        cert = static_cast<int>(L);
        break;
      }
    if (!cert) {
      std::vector<std::string> live;
      for (const Path& p : levels.back()) live.push_back(p.str(pres.quiver));
      throw NotFiniteDimensional(
          "no finiteness certificate by degree " + std::to_string(max_degree) +
              " (" + std::to_string(levels.back().size()) +
              " irreducible paths at length " +
              std::to_string(levels.size() - 1) + ")",
          live);
    }
    // With certificate L every reduced lead has length <= L, so all
    // obligations live in degree <= 2L - 1; processing that far makes the
    // basis confluent in every degree.
    int need = 2 * *cert - 1;
    if (need > cap) {
      cap = need;
      continue;
    }
    st.gb.certificate_ = cert;
    break;
  }
  st.gb.completion_degree_ = cap;
  st.gb.fully_completed_ = !st.pending_live_obligations();
  st.finalize();
  return st.gb;
}

ReductionCertificate normal_form(const PathVector& x, const GroebnerBasis& gb) {
  if (!gb.fully_completed() &&
      static_cast<int>(x.degree()) > gb.completion_degree())
    throw DegreeOverflow("element degree " + std::to_string(x.degree()) +
                         " exceeds completion degree " +
                         std::to_string(gb.completion_degree()));
  Reducer red{gb.quiver(), gb.elements(), nullptr};
  std::vector<ElementTraceStep> steps;
  PathVector nf = red.reduce(x, &steps);
  std::vector<TraceTerm> trace;
  for (const ElementTraceStep& s : steps) {
    auto part = composed(s.left, gb.elements()[s.element].origin, s.right,
                         s.coeff);
    trace.insert(trace.end(), part.begin(), part.end());
  }
  // collapse duplicates for a tidy certificate
  std::map<std::tuple<int, Path, Path>, Scalar> acc;
  for (TraceTerm& t : trace) {
    auto key = std::make_tuple(t.generator, t.left, t.right);
    auto [it, fresh] = acc.emplace(key, t.coeff);
    if (!fresh) it->second += t.coeff;
  }
  std::vector<TraceTerm> merged;
  for (auto& [key, c] : acc)
    if (!c.is_zero())
      merged.push_back(
          TraceTerm{c, std::get<1>(key), std::get<0>(key), std::get<2>(key)});
  return ReductionCertificate{x, std::move(nf), std::move(merged)};
}

}  // namespace quiverhh
