#include "einkit/limit_set.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace einkit {

namespace {

GroupElement to_diagonal_element(const GroupElement& g) {
  if (g.basis == Basis::Diagonal) return g;
  const Matrix T = basis_change_matrix(g.n(), Basis::Split, Basis::Diagonal);
  const Matrix Ti = basis_change_matrix(g.n(), Basis::Diagonal, Basis::Split);
  return validate(T * g.matrix * Ti, Basis::Diagonal, 1e-7);
}

}  // namespace

GroupPresentation make_presentation(std::vector<GroupElement> generators,
                                    RelationHint hint) {
  require(!generators.empty(), ErrorCode::InvalidArgument,
          "presentation: at least one generator");
  require(generators.size() <= 26, ErrorCode::InvalidArgument,
          "presentation: at most 26 generators");
  GroupPresentation G;
  G.relation_hint = hint;
  G.n = generators.front().n();
  const int m = G.n + 2;
  for (auto& g : generators) {
    GroupElement d = to_diagonal_element(g);
    require(d.n() == G.n, ErrorCode::DimensionMismatch,
            "presentation: generators of mixed dimension");
    G.generators.push_back(d);
  }
  for (const auto& g : G.generators) {
    GroupElement inv = group_inverse(g);
    require((g.matrix * inv.matrix - Matrix::Identity(m, m)).norm() <= 1e-9 * m,
            ErrorCode::NumericalFailure, "presentation: inverse check failed");
    G.inverses.push_back(inv);
  }
  return G;
}

GroupElement evaluate_word(const GroupPresentation& G, const std::string& word) {
  const int m = G.n + 2;
  Matrix acc = Matrix::Identity(m, m);
  const int k = static_cast<int>(G.generators.size());
  for (char c : word) {
    int idx = -1;
    if (c >= 'a' && c < 'a' + k) idx = c - 'a';
    if (c >= 'A' && c < 'A' + k) idx = k + (c - 'A');
    require(idx >= 0, ErrorCode::ParseError, std::string("unknown letter '") + c + "'");
    acc = acc * G.letter(idx).matrix;
  }
  return GroupElement{acc, Basis::Diagonal, 0.0, acc.determinant()};
}

namespace {

int inverse_letter(int idx, int gen_count) {
  return idx < gen_count ? idx + gen_count : idx - gen_count;
}

// Tolerance-based element store for RelationHint::Unknown: candidates are
// windowed by trace so lookup stays near-linear.
class ElementStore {
 public:
  explicit ElementStore(double tol) : tol_(tol) {}

  bool insert(const Matrix& g) {
    const double tr = g.trace();
    auto lo = std::lower_bound(by_trace_.begin(), by_trace_.end(),
                               tr - tol_ * (g.rows() + 1.0),
                               [](const Entry& e, double v) { return e.trace < v; });
    for (auto it = lo; it != by_trace_.end() &&
                       it->trace <= tr + tol_ * (g.rows() + 1.0);
         ++it) {
      if ((elements_[it->index] - g).cwiseAbs().maxCoeff() <= tol_) return false;
    }
    Entry e{tr, elements_.size()};
    elements_.push_back(g);
    by_trace_.insert(std::upper_bound(by_trace_.begin(), by_trace_.end(), tr,
                                      [](double v, const Entry& en) {
                                        return v < en.trace;
                                      }),
                     e);
    return true;
  }

 private:
  struct Entry {
    double trace;
    std::size_t index;
  };
  double tol_;
  std::vector<Matrix> elements_;
  std::vector<Entry> by_trace_;
};

}  // namespace

std::vector<Word> enumerate_words(const GroupPresentation& G, int max_len,
                                  std::size_t budget) {
  require(max_len >= 1, ErrorCode::InvalidArgument, "enumerate_words: max_len >= 1");
  const int k = static_cast<int>(G.generators.size());
  const int m = G.n + 2;

  std::vector<Word> out;
  ElementStore store(1e-8);
  if (G.relation_hint == RelationHint::Unknown)
    store.insert(Matrix::Identity(m, m));

  struct Node {
    std::string name;
    Matrix matrix;
    int last = -1;
  };
  std::deque<Node> frontier;
  frontier.push_back(Node{"", Matrix::Identity(m, m), -1});

  for (int len = 1; len <= max_len; ++len) {
    std::deque<Node> next;
    for (const auto& node : frontier) {
      for (int idx = 0; idx < 2 * k; ++idx) {
        if (node.last >= 0 && idx == inverse_letter(node.last, k)) continue;
        Node child;
        child.name = node.name + GroupPresentation::letter_name(idx, k);
        child.matrix = node.matrix * G.letter(idx).matrix;
        child.last = idx;
        if (G.relation_hint == RelationHint::Unknown && !store.insert(child.matrix))
          continue;
        if (out.size() >= budget)
          fail(ErrorCode::BudgetExceeded,
               "enumerate_words: budget of " + std::to_string(budget) + " exceeded");
        out.push_back(Word{child.name,
                           GroupElement{child.matrix, Basis::Diagonal, 0.0,
                                        child.matrix.determinant()}});
        next.push_back(std::move(child));
      }
    }
    frontier.swap(next);
  }
  return out;
}

void visit_words(const GroupPresentation& G, int max_len,
                 const std::function<bool(const std::string&, const GroupElement&)>& visit,
                 std::size_t budget) {
  require(max_len >= 1, ErrorCode::InvalidArgument, "visit_words: max_len >= 1");
  const int k = static_cast<int>(G.generators.size());
  const int m = G.n + 2;
  std::size_t seen = 0;
  std::string name;
  name.reserve(max_len);

  // recursive DFS over the reduced-word tree (depth bounded by max_len)
  std::function<bool(const Matrix&, int, int)> dfs = [&](const Matrix& acc, int last,
                                                         int depth) -> bool {
    if (depth == max_len) return true;
    for (int idx = 0; idx < 2 * k; ++idx) {
      if (last >= 0 && idx == inverse_letter(last, k)) continue;
      if (++seen > budget)
        fail(ErrorCode::BudgetExceeded, "visit_words: budget exceeded");
      Matrix child = acc * G.letter(idx).matrix;
      name.push_back(GroupPresentation::letter_name(idx, k));
      const GroupElement e{child, Basis::Diagonal, 0.0, 0.0};
      if (!visit(name, e)) {
        name.pop_back();
        return false;
      }
      if (!dfs(child, idx, depth + 1)) {
        name.pop_back();
        return false;
      }
      name.pop_back();
    }
    return true;
  };
  dfs(Matrix::Identity(m, m), -1, 0);
}

namespace {

// Exact projection of a nearly null unit vector onto the cone: rescale the
// timelike and spacelike parts to equal Euclidean length.
Vector project_to_cone(const Vector& v) {
  const int m = static_cast<int>(v.size());
  const double tn = std::hypot(v[0], v[1]);
  const double sn = v.segment(2, m - 2).norm();
  require(tn > 1e-12 && sn > 1e-12, ErrorCode::NumericalFailure,
          "project_to_cone: degenerate direction");
  Vector out(m);
  out[0] = v[0] / tn;
  out[1] = v[1] / tn;
  out.segment(2, m - 2) = v.segment(2, m - 2) / sn;
  return out / std::sqrt(2.0);
}

Vector sign_canonical(const Vector& v) {
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12) return v[i] < 0.0 ? Vector(-v) : v;
  }
  return v;
}

}  // namespace

LimitSetSample approximate_limit_set(const GroupPresentation& G,
                                     const LimitSetOptions& options) {
  if (options.max_len < 1)
    fail(ErrorCode::EmptySample, "approximate_limit_set: max_len < 1 yields nothing");

  struct Raw {
    Vector rep;
    std::string word;
    double gap;
  };
  std::vector<Raw> raw;

  const auto words = enumerate_words(G, options.max_len, options.budget);
  for (const auto& w : words) {
    CartanFactors f;
    try {
      f = cartan_decompose(w.element);
    } catch (const Error&) {
      continue;  // numerically hopeless word, skip
    }
    if (f.gap() < options.gap_min) continue;
    ProjectivePoint pole;
    if (!attracting_line(w.element, pole)) {
      try {
        pole = p1_data(w.element).p_plus;
      } catch (const Error&) {
        continue;
      }
    }
    raw.push_back(Raw{project_to_cone(pole.rep), w.name, f.gap()});
  }
  if (raw.empty())
    fail(ErrorCode::EmptySample,
         "approximate_limit_set: no word reached the gap threshold");

  // canonical sort, then greedy dedupe in the line metric
  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
    const Vector ca = sign_canonical(a.rep), cb = sign_canonical(b.rep);
    for (int i = 0; i < ca.size(); ++i) {
      if (ca[i] < cb[i]) return true;
      if (ca[i] > cb[i]) return false;
    }
    return a.gap > b.gap;
  });

  LimitSetSample sample;
  sample.n = G.n;
  sample.dedupe_radius = options.dedupe_radius;
  for (const auto& r : raw) {
    bool fresh = true;
    for (const auto& kept : sample.points) {
      const double d =
          std::acos(clamp01(std::abs(kept.point.rep.dot(r.rep))));
      if (d < options.dedupe_radius) {
        fresh = false;
        break;
      }
    }
    if (fresh)
      sample.points.push_back(LimitPoint{make_ein_klein(r.rep, 1e-7), r.word, r.gap});
  }
  sample.invariance_residual = invariance_residual(sample, G);
  return sample;
}

double invariance_residual(const LimitSetSample& S, const GroupPresentation& G) {
  if (S.points.empty()) return 0.0;
  double worst = 0.0;
  for (const auto& gen : G.generators) {
    for (const auto& p : S.points) {
      const Vector image = (gen.matrix * p.point.rep).normalized();
      double nearest = std::numeric_limits<double>::infinity();
      for (const auto& q : S.points) {
        nearest = std::min(nearest,
                           std::acos(clamp01(std::abs(image.dot(q.point.rep)))));
      }
      worst = std::max(worst, nearest);
    }
  }
  return worst;
}

namespace {

// Greedy sign propagation along a nearest-neighbour spanning tree (Prim).
std::vector<int> propagate_signs(const LimitSetSample& S) {
  const std::size_t n = S.points.size();
  std::vector<int> sign(n, 0);
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> parent(n, 0);
  std::vector<bool> done(n, false);
  sign[0] = 1;
  done[0] = true;
  for (std::size_t j = 1; j < n; ++j) {
    best[j] = projective_distance(ProjectivePoint{S.points[0].point.rep},
                                  ProjectivePoint{S.points[j].point.rep});
    parent[j] = 0;
  }
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t pick = n;
    double pick_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j)
      if (!done[j] && best[j] < pick_d) {
        pick_d = best[j];
        pick = j;
      }
    if (pick == n) break;
    done[pick] = true;
    const double ip = inner_product(S.points[parent[pick]].point.rep,
                                    S.points[pick].point.rep, Basis::Diagonal) *
                      sign[parent[pick]];
    sign[pick] = ip < 0.0 ? 1 : -1;
    for (std::size_t j = 0; j < n; ++j) {
      if (done[j]) continue;
      const double d = projective_distance(ProjectivePoint{S.points[pick].point.rep},
                                           ProjectivePoint{S.points[j].point.rep});
      if (d < best[j]) {
        best[j] = d;
        parent[j] = pick;
      }
    }
  }
  return sign;
}

}  // namespace

NegativityReport certify_negative(const LimitSetSample& S, double margin) {
  require(S.points.size() >= 2, ErrorCode::InvalidArgument,
          "certify_negative: need at least two points");
  NegativityReport report;
  report.signs = propagate_signs(S);
  report.worst_value = -std::numeric_limits<double>::infinity();
  const std::size_t n = S.points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double ip = report.signs[i] * report.signs[j] *
                        inner_product(S.points[i].point.rep, S.points[j].point.rep,
                                      Basis::Diagonal);
      if (ip > report.worst_value) {
        report.worst_value = ip;
        report.worst_i = i;
        report.worst_j = j;
      }
    }
  }
  report.negative = report.worst_value < -margin;
  return report;
}

LimitSetSample lift_acausal(const LimitSetSample& S) {
  require(!S.points.empty(), ErrorCode::EmptySample, "lift_acausal: empty sample");
  LimitSetSample out = S;
  const std::vector<int> signs =
      S.points.size() >= 2 ? propagate_signs(S) : std::vector<int>{1};

  std::vector<UniversalPoint> lift;
  lift.reserve(S.points.size());
  double t0 = 0.0;
  for (std::size_t i = 0; i < S.points.size(); ++i) {
    Vector rep = S.points[i].point.rep * static_cast<double>(signs[i]);
    out.points[i].point.rep = rep;
    const ConformalPoint c = klein_to_conformal(out.points[i].point);
    double t = c.theta;
    if (i == 0) {
      t0 = t;  // seed lifted into [0, 2*pi)
    } else {
      t += 2.0 * kPi * std::round((t0 - t) / (2.0 * kPi));
    }
    lift.push_back(UniversalPoint{c.x, t});
  }

  for (std::size_t i = 0; i < lift.size(); ++i) {
    for (std::size_t j = i + 1; j < lift.size(); ++j) {
      if (causal_classify(lift[i], lift[j]) != CausalRelation::Unrelated)
        fail(ErrorCode::InconsistentLift,
             "lift_acausal: no branch assignment is acausal (points " +
                 std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  }
  out.lift = std::move(lift);
  return out;
}

}  // namespace einkit
