#include "coreflect/algebra.hpp"

#include <algorithm>
#include <set>

#include "coreflect/error.hpp"
#include "coreflect/linalg.hpp"

namespace coreflect {

std::optional<std::size_t> Quiver::vertexIndex(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::arrowIndex(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  return std::nullopt;
}

void Quiver::validate() const {
  std::set<std::string> seen;
  for (const auto& v : vertices)
    if (!seen.insert(v).second) throw Error("duplicate vertex name '" + v + "'");
  std::set<std::string> arrowNames;
  for (const auto& a : arrows) {
    if (!arrowNames.insert(a.name).second) throw Error("duplicate arrow name '" + a.name + "'");
    if (a.source >= vertices.size() || a.target >= vertices.size())
      throw Error("arrow '" + a.name + "' has an undeclared endpoint");
  }
}

std::optional<Path> concatenate(const Path& a, const Path& b, const Quiver&) {
  if (a.target != b.source) return std::nullopt;
  Path p{a.source, b.target, a.arrows};
  p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
  return p;
}

std::string pathName(const Path& p, const Quiver& q) {
  if (p.arrows.empty()) return "e_" + q.vertices[p.source];
  std::string out;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k) out += "*";
    out += q.arrows[p.arrows[k]].name;
  }
  return out;
}

Relation Relation::make(const Quiver& q, std::vector<RelationTerm> terms) {
  std::map<std::vector<std::size_t>, Scalar> merged;
  std::vector<std::vector<std::size_t>> order;
  for (auto& t : terms) {
    if (t.arrows.size() < 2) throw Error("relation paths must have length at least 2");
    for (std::size_t k = 0; k < t.arrows.size(); ++k) {
      if (t.arrows[k] >= q.arrows.size()) throw Error("relation uses an undeclared arrow");
      if (k && q.arrows[t.arrows[k - 1]].target != q.arrows[t.arrows[k]].source)
        throw Error("relation path is not composable at '" + q.arrows[t.arrows[k]].name + "'");
    }
    auto it = merged.find(t.arrows);
    if (it == merged.end()) {
      merged.emplace(t.arrows, t.coefficient);
      order.push_back(t.arrows);
    } else {
      it->second += t.coefficient;
    }
  }
  Relation r;
  for (const auto& path : order) {
    const Scalar& c = merged.at(path);
    if (!c.isZero()) r.terms.push_back({c, path});
  }
  if (r.terms.empty()) throw Error("relation is identically zero");
  r.source = q.arrows[r.terms.front().arrows.front()].source;
  r.target = q.arrows[r.terms.front().arrows.back()].target;
  for (const auto& t : r.terms)
    if (q.arrows[t.arrows.front()].source != r.source ||
        q.arrows[t.arrows.back()].target != r.target)
      throw Error("relation paths are not parallel");
  return r;
}

std::string relationText(const Relation& r, const Quiver& q) {
  std::string out;
  for (std::size_t k = 0; k < r.terms.size(); ++k) {
    const auto& t = r.terms[k];
    std::string c = t.coefficient.str();
    const bool negative = r.terms[k].coefficient.field().isRationals() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (k) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    if (c != "1") out += c + "*";
    Path p{r.source, r.target, t.arrows};
    out += pathName(p, q);
  }
  return out;
}

AlgebraSpec AlgebraSpec::opposite() const {
  AlgebraSpec op;
  op.field = field;
  op.nilBound = nilBound;
  op.quiver.vertices = quiver.vertices;
  for (const auto& a : quiver.arrows) op.quiver.arrows.push_back({a.name, a.target, a.source});
  for (const auto& r : relations) {
    Relation rr;
    rr.source = r.target;
    rr.target = r.source;
    for (const auto& t : r.terms) {
      RelationTerm tt{t.coefficient, t.arrows};
      std::reverse(tt.arrows.begin(), tt.arrows.end());
      rr.terms.push_back(std::move(tt));
    }
    op.relations.push_back(std::move(rr));
  }
  return op;
}

std::optional<std::size_t> PathBasis::indexOf(const Path& p) const {
  auto it = basisIndex_.find(p);
  if (it == basisIndex_.end()) return std::nullopt;
  return it->second;
}

PathBasis::Sparse PathBasis::normalForm(const Path& p) const {
  if (p.length() > nilBound_) return {};
  auto it = pathIndex_.find(p);
  if (it == pathIndex_.end()) throw Error("normalForm: not a path of this quiver");
  return normalForms_[it->second];
}

PathBasis::Sparse PathBasis::multiply(std::size_t i, std::size_t j) const {
  auto p = concatenate(elements_.at(i), elements_.at(j), quiver_);
  if (!p) return {};
  return normalForm(*p);
}

std::vector<std::size_t> PathBasis::between(std::size_t source, std::size_t target) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < elements_.size(); ++k)
    if (elements_[k].source == source && elements_[k].target == target) out.push_back(k);
  return out;
}

PathBasis pathBasis(const AlgebraSpec& spec) {
  const Quiver& q = spec.quiver;
  q.validate();
  if (spec.nilBound < 1) throw Error("nil bound must be at least 1");
  const Field& f = spec.field;
  const std::size_t bound = spec.nilBound;

  // All paths of length <= bound, by length then lexicographically.
  std::vector<Path> paths;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) paths.push_back(Path::trivial(v));
  std::size_t levelStart = 0;
  for (std::size_t len = 1; len <= bound; ++len) {
    const std::size_t levelEnd = paths.size();
    for (std::size_t k = levelStart; k < levelEnd; ++k)
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != paths[k].target) continue;
        Path p = paths[k];
        p.arrows.push_back(a);
        p.target = q.arrows[a].target;
        paths.push_back(std::move(p));
      }
    levelStart = levelEnd;
  }
  std::map<Path, std::size_t> pathIndex;
  for (std::size_t k = 0; k < paths.size(); ++k) pathIndex.emplace(paths[k], k);

  // Columns ordered longest first so that the surviving (non-pivot) paths
  // are as short as possible.
  const std::size_t n = paths.size();
  std::vector<std::size_t> colOf(n);
  std::vector<std::size_t> pathOfCol(n);
  {
    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < n; ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return paths[x].length() > paths[y].length();
    });
    for (std::size_t c = 0; c < n; ++c) {
      pathOfCol[c] = order[c];
      colOf[order[c]] = c;
    }
  }

  // Spanning set of I modulo paths longer than the bound: u * r * v.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
  for (const auto& r : spec.relations) {
    std::size_t minLen = SIZE_MAX;
    for (const auto& t : r.terms) minLen = std::min(minLen, t.arrows.size());
    for (const auto& u : paths) {
      if (u.target != r.source || u.length() + minLen > bound) continue;
      for (const auto& v : paths) {
        if (v.source != r.target || u.length() + minLen + v.length() > bound) continue;
        std::vector<std::pair<std::size_t, Scalar>> row;
        for (const auto& t : r.terms) {
          if (u.length() + t.arrows.size() + v.length() > bound) continue;
          Path p{u.source, v.target, u.arrows};
          p.arrows.insert(p.arrows.end(), t.arrows.begin(), t.arrows.end());
          p.arrows.insert(p.arrows.end(), v.arrows.begin(), v.arrows.end());
          row.emplace_back(colOf[pathIndex.at(p)], t.coefficient);
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
  Mat ideal(f, rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, s] : rows[i]) ideal.set(i, c, ideal.at(i, c) + s);
  auto red = rref(ideal);

  std::vector<long> pivotRow(n, -1);
  for (std::size_t i = 0; i < red.rank; ++i) pivotRow[red.pivots[i]] = static_cast<long>(i);

  PathBasis out;
  out.quiver_ = q;
  out.field_ = f;
  out.nilBound_ = bound;
  for (std::size_t k = 0; k < n; ++k)
    if (pivotRow[colOf[k]] < 0) {
      out.basisIndex_.emplace(paths[k], out.elements_.size());
      out.elements_.push_back(paths[k]);
    }

  out.normalForms_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t c = colOf[k];
    auto& nf = out.normalForms_[k];
    if (pivotRow[c] < 0) {
      nf.emplace_back(out.basisIndex_.at(paths[k]), Scalar::one(f));
      continue;
    }
    const auto r = static_cast<std::size_t>(pivotRow[c]);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == c || red.reduced.entryIsZero(r, j)) continue;
      nf.emplace_back(out.basisIndex_.at(paths[pathOfCol[j]]), -red.reduced.at(r, j));
    }
    std::sort(nf.begin(), nf.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  for (std::size_t k = 0; k < n; ++k)
    if (paths[k].length() == bound && !out.normalForms_[k].empty())
      throw NotFiniteDimensionalAtBound("path " + pathName(paths[k], q) + " of length " +
                                        std::to_string(bound) +
                                        " survives reduction; increase nil_bound or add relations");
  out.pathIndex_ = std::move(pathIndex);
  return out;
}

Algebra::Algebra(AlgebraSpec spec) : spec_(std::move(spec)), basis_(pathBasis(spec_)) {}

AlgebraPtr Algebra::create(AlgebraSpec spec) {
  for (const auto& r : spec.relations)
    for (const auto& t : r.terms)
      if (!(t.coefficient.field() == spec.field))
        throw Error("relation coefficient from a different field");
  return AlgebraPtr(new Algebra(std::move(spec)));
}

bool sameAlgebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->spec() == b->spec();
}

AlgebraPtr oppositeAlgebra(const AlgebraPtr& a) { return Algebra::create(a->spec().opposite()); }

}  // namespace coreflect
