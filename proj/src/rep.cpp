#include "coreflect/rep.hpp"

#include <numeric>

#include "coreflect/error.hpp"
#include "coreflect/random.hpp"

namespace coreflect {

using detail::storage;
using detail::withOps;

namespace {

void requireSameAlgebra(const Rep& a, const Rep& b, const char* where) {
  if (!sameAlgebra(a.algebra(), b.algebra()))
    throw AlgebraMismatch(std::string(where) + ": representations over different algebras");
}

void requireComposable(const Mor& g, const Mor& f, const char* where) {
  if (!(f.codomain() == g.domain()))
    throw DimensionMismatch(std::string(where) + ": codomain and domain differ");
}

// Stacks the vertex matrices of a morphism row-major into one column.
Mat stack(const std::vector<Mat>& maps, const Field& f) {
  std::size_t n = 0;
  for (const auto& m : maps) n += m.rows() * m.cols();
  Mat out(f, n, 1);
  withOps(f, [&](const auto& ops) {
    auto& o = storage(out, ops);
    std::size_t k = 0;
    for (const auto& m : maps)
      for (const auto& x : storage(m, ops)) o[k++] = x;
  });
  return out;
}

std::vector<Mat> unstack(const Mat& column, std::size_t col, const Rep& m, const Rep& n) {
  std::vector<Mat> maps;
  const Field& f = m.field();
  withOps(f, [&](const auto& ops) {
    const auto& c = storage(column, ops);
    const std::size_t w = column.cols();
    std::size_t k = 0;
    for (std::size_t v = 0; v < m.vertexCount(); ++v) {
      Mat x(f, n.dim(v), m.dim(v));
      for (auto& e : storage(x, ops)) e = c[(k++) * w + col];
      maps.push_back(std::move(x));
    }
  });
  return maps;
}

}  // namespace

Rep::Rep(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Mat> arrows) {
  if (!algebra) throw Error("Rep: missing algebra");
  if (dims.size() != algebra->vertexCount())
    throw DimensionMismatch("Rep: expected " + std::to_string(algebra->vertexCount()) +
                            " vertex dimensions, got " + std::to_string(dims.size()));
  if (arrows.size() != algebra->arrowCount())
    throw DimensionMismatch("Rep: expected " + std::to_string(algebra->arrowCount()) +
                            " arrow matrices, got " + std::to_string(arrows.size()));
  const auto& q = algebra->quiver();
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const auto& arr = q.arrows[a];
    if (!(arrows[a].field() == algebra->field()))
      throw Error("Rep: arrow '" + arr.name + "' has entries from a different field");
    if (arrows[a].rows() != dims[arr.target] || arrows[a].cols() != dims[arr.source])
      throw DimensionMismatch("Rep: arrow '" + arr.name + "' must be " +
                              std::to_string(dims[arr.target]) + "x" +
                              std::to_string(dims[arr.source]));
  }
  d_ = std::make_shared<const Data>(Data{std::move(algebra), std::move(dims), std::move(arrows)});
}

Rep Rep::zero(AlgebraPtr algebra) {
  std::vector<Mat> arrows(algebra->arrowCount(), Mat(algebra->field(), 0, 0));
  std::vector<std::size_t> dims(algebra->vertexCount(), 0);
  return Rep(std::move(algebra), std::move(dims), std::move(arrows));
}

std::size_t Rep::totalDim() const noexcept {
  if (!d_) return 0;
  return std::accumulate(d_->dims.begin(), d_->dims.end(), std::size_t{0});
}

Mat Rep::pathMatrix(const Path& p) const {
  Mat x = Mat::identity(field(), dim(p.source));
  for (auto a : p.arrows) x = arrow(a) * x;
  return x;
}

bool operator==(const Rep& a, const Rep& b) {
  if (a.d_ == b.d_) return true;
  if (!a.d_ || !b.d_) return false;
  return sameAlgebra(a.algebra(), b.algebra()) && a.dims() == b.dims() && a.arrows() == b.arrows();
}

std::string dimVector(const Rep& m) {
  std::string out = "(";
  for (std::size_t v = 0; v < m.vertexCount(); ++v) {
    if (v) out += ",";
    out += std::to_string(m.dim(v));
  }
  return out + ")";
}

std::vector<std::string> validate(const Rep& m) {
  std::vector<std::string> bad;
  const auto& spec = m.algebra()->spec();
  for (const auto& r : spec.relations) {
    Mat sum(m.field(), m.dim(r.target), m.dim(r.source));
    for (const auto& t : r.terms)
      sum = sum + m.pathMatrix(Path{r.source, r.target, t.arrows}).scaled(t.coefficient);
    if (!sum.isZero()) bad.push_back(relationText(r, spec.quiver));
  }
  return bad;
}

Mor::Mor(Unchecked, Rep domain, Rep codomain, std::vector<Mat> maps)
    : dom_(std::move(domain)), cod_(std::move(codomain)), maps_(std::move(maps)) {}

Mor uncheckedMor(Rep domain, Rep codomain, std::vector<Mat> maps) {
  return Mor(Mor::Unchecked{}, std::move(domain), std::move(codomain), std::move(maps));
}

Mor::Mor(Rep domain, Rep codomain, std::vector<Mat> maps)
    : dom_(std::move(domain)), cod_(std::move(codomain)), maps_(std::move(maps)) {
  requireSameAlgebra(dom_, cod_, "Mor");
  if (maps_.size() != dom_.vertexCount())
    throw DimensionMismatch("Mor: one matrix per vertex required");
  for (std::size_t v = 0; v < maps_.size(); ++v)
    if (maps_[v].rows() != cod_.dim(v) || maps_[v].cols() != dom_.dim(v) ||
        !(maps_[v].field() == dom_.field()))
      throw DimensionMismatch("Mor: vertex " + std::to_string(v) + " map has wrong shape");
  const auto& q = dom_.algebra()->quiver();
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& arr = q.arrows[a];
    if (cod_.arrow(a) * maps_[arr.source] != maps_[arr.target] * dom_.arrow(a))
      throw InvariantViolation("Mor: naturality fails at arrow '" + arr.name + "'");
  }
}

Mor Mor::zero(const Rep& domain, const Rep& codomain) {
  requireSameAlgebra(domain, codomain, "Mor::zero");
  std::vector<Mat> maps;
  for (std::size_t v = 0; v < domain.vertexCount(); ++v)
    maps.emplace_back(domain.field(), codomain.dim(v), domain.dim(v));
  return uncheckedMor(domain, codomain, std::move(maps));
}

Mor Mor::identity(const Rep& m) {
  std::vector<Mat> maps;
  for (std::size_t v = 0; v < m.vertexCount(); ++v)
    maps.push_back(Mat::identity(m.field(), m.dim(v)));
  return uncheckedMor(m, m, std::move(maps));
}

bool Mor::isZero() const {
  for (const auto& m : maps_)
    if (!m.isZero()) return false;
  return true;
}

Mor operator*(const Mor& g, const Mor& f) {
  requireComposable(g, f, "compose");
  std::vector<Mat> maps;
  for (std::size_t v = 0; v < f.maps_.size(); ++v) maps.push_back(g.maps_[v] * f.maps_[v]);
  return uncheckedMor(f.dom_, g.cod_, std::move(maps));
}

Mor operator+(const Mor& f, const Mor& g) {
  if (!(f.dom_ == g.dom_) || !(f.cod_ == g.cod_))
    throw DimensionMismatch("Mor +: morphisms are not parallel");
  std::vector<Mat> maps;
  for (std::size_t v = 0; v < f.maps_.size(); ++v) maps.push_back(f.maps_[v] + g.maps_[v]);
  return uncheckedMor(f.dom_, f.cod_, std::move(maps));
}

Mor operator-(const Mor& f, const Mor& g) { return f + (-g); }

Mor Mor::operator-() const {
  std::vector<Mat> maps;
  for (const auto& m : maps_) maps.push_back(-m);
  return uncheckedMor(dom_, cod_, std::move(maps));
}

Mor Mor::scaled(const Scalar& s) const {
  std::vector<Mat> maps;
  for (const auto& m : maps_) maps.push_back(m.scaled(s));
  return uncheckedMor(dom_, cod_, std::move(maps));
}

bool operator==(const Mor& a, const Mor& b) {
  return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.maps_ == b.maps_;
}

SubRep::SubRep(Rep parent, std::vector<Subspace> spaces)
    : parent_(std::move(parent)), spaces_(std::move(spaces)) {
  if (spaces_.size() != parent_.vertexCount())
    throw DimensionMismatch("SubRep: one subspace per vertex required");
  for (std::size_t v = 0; v < spaces_.size(); ++v)
    if (spaces_[v].ambientDim() != parent_.dim(v))
      throw DimensionMismatch("SubRep: subspace at vertex " + std::to_string(v) +
                              " has the wrong ambient dimension");
  const auto& q = parent_.algebra()->quiver();
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& arr = q.arrows[a];
    if (spaces_[arr.source].isZero()) continue;
    if (!spaces_[arr.target].containsColumns(parent_.arrow(a) * spaces_[arr.source].inclusion()))
      throw InvariantViolation("SubRep: not stable under arrow '" + arr.name + "'");
  }
}

SubRep SubRep::zero(const Rep& parent) {
  std::vector<Subspace> s;
  for (std::size_t v = 0; v < parent.vertexCount(); ++v)
    s.emplace_back(parent.field(), parent.dim(v));
  return SubRep(parent, std::move(s));
}

SubRep SubRep::full(const Rep& parent) {
  std::vector<Subspace> s;
  for (std::size_t v = 0; v < parent.vertexCount(); ++v)
    s.push_back(Subspace::full(parent.field(), parent.dim(v)));
  return SubRep(parent, std::move(s));
}

std::size_t SubRep::totalDim() const noexcept {
  std::size_t n = 0;
  for (const auto& s : spaces_) n += s.dim();
  return n;
}

bool SubRep::contains(const SubRep& other) const {
  for (std::size_t v = 0; v < spaces_.size(); ++v)
    if (!other.spaces_[v].isSubspaceOf(spaces_[v])) return false;
  return true;
}

SubRep subSum(const SubRep& a, const SubRep& b) {
  std::vector<Subspace> s;
  for (std::size_t v = 0; v < a.spaces().size(); ++v) s.push_back(subspaceSum(a.at(v), b.at(v)));
  return SubRep(a.parent(), std::move(s));
}

SubRep subIntersect(const SubRep& a, const SubRep& b) {
  std::vector<Subspace> s;
  for (std::size_t v = 0; v < a.spaces().size(); ++v)
    s.push_back(subspaceIntersect(a.at(v), b.at(v)));
  return SubRep(a.parent(), std::move(s));
}

RepWithMor carrier(const SubRep& s) {
  const Rep& m = s.parent();
  const auto& q = m.algebra()->quiver();
  std::vector<std::size_t> dims;
  std::vector<Mat> incl;
  for (std::size_t v = 0; v < m.vertexCount(); ++v) {
    dims.push_back(s.at(v).dim());
    incl.push_back(s.at(v).inclusion());
  }
  std::vector<Mat> arrows;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& arr = q.arrows[a];
    auto c = s.at(arr.target).coordinates(m.arrow(a) * incl[arr.source]);
    if (!c) throw InvariantViolation("carrier: subrepresentation is not arrow-stable");
    arrows.push_back(std::move(*c));
  }
  Rep k(m.algebra(), std::move(dims), std::move(arrows));
  return {k, uncheckedMor(k, m, std::move(incl))};
}

RepWithMor quotient(const SubRep& s) {
  const Rep& m = s.parent();
  const auto& q = m.algebra()->quiver();
  std::vector<std::size_t> dims;
  std::vector<Mat> proj, sect;
  for (std::size_t v = 0; v < m.vertexCount(); ++v) {
    dims.push_back(m.dim(v) - s.at(v).dim());
    proj.push_back(s.at(v).quotientProjection());
    sect.push_back(s.at(v).quotientSection());
  }
  std::vector<Mat> arrows;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& arr = q.arrows[a];
    arrows.push_back(proj[arr.target] * m.arrow(a) * sect[arr.source]);
  }
  Rep c(m.algebra(), std::move(dims), std::move(arrows));
  return {c, uncheckedMor(m, c, std::move(proj))};
}

SubRep generatedSubRep(const Rep& m, const std::vector<std::pair<std::size_t, Mat>>& elements) {
  const Field& f = m.field();
  const auto& q = m.algebra()->quiver();
  std::vector<Subspace> s;
  for (std::size_t v = 0; v < m.vertexCount(); ++v) s.emplace_back(f, m.dim(v));
  std::vector<bool> dirty(m.vertexCount(), false);
  for (const auto& [v, x] : elements) {
    if (x.rows() != m.dim(v)) throw DimensionMismatch("generatedSubRep: element has wrong length");
    s[v] = subspaceSum(s[v], Subspace::spannedByColumns(x));
    dirty[v] = true;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      const auto& arr = q.arrows[a];
      if (!dirty[arr.source] || s[arr.source].isZero()) continue;
      auto grown = subspaceSum(s[arr.target],
                               Subspace::spannedByColumns(m.arrow(a) * s[arr.source].inclusion()));
      if (grown.dim() != s[arr.target].dim()) {
        s[arr.target] = std::move(grown);
        dirty[arr.target] = true;
        changed = true;
      }
    }
  }
  return SubRep(m, std::move(s));
}

SubRep kernelSub(const Mor& f) {
  std::vector<Subspace> s;
  for (std::size_t v = 0; v < f.maps().size(); ++v) s.push_back(kernelBasis(f.at(v)));
  return SubRep(f.domain(), std::move(s));
}

SubRep imageSub(const Mor& f) {
  std::vector<Subspace> s;
  for (std::size_t v = 0; v < f.maps().size(); ++v) s.push_back(imageSpace(f.at(v)));
  return SubRep(f.codomain(), std::move(s));
}

SubRep imageOfSub(const Mor& f, const SubRep& sub) {
  if (!(sub.parent() == f.domain())) throw DimensionMismatch("imageOfSub: not a subobject of dom f");
  std::vector<Subspace> s;
  for (std::size_t v = 0; v < f.maps().size(); ++v)
    s.push_back(imageSpace(f.at(v) * sub.at(v).inclusion()));
  return SubRep(f.codomain(), std::move(s));
}

SubRep preimageSub(const Mor& f, const SubRep& t) {
  if (!(t.parent() == f.codomain())) throw DimensionMismatch("preimageSub: not a subobject of cod f");
  std::vector<Subspace> s;
  for (std::size_t v = 0; v < f.maps().size(); ++v) s.push_back(preimage(f.at(v), t.at(v)));
  return SubRep(f.domain(), std::move(s));
}

SubRep radicalSub(const Rep& m) {
  const auto& q = m.algebra()->quiver();
  std::vector<Subspace> s;
  for (std::size_t v = 0; v < m.vertexCount(); ++v) s.emplace_back(m.field(), m.dim(v));
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto t = q.arrows[a].target;
    s[t] = subspaceSum(s[t], imageSpace(m.arrow(a)));
  }
  return SubRep(m, std::move(s));
}

HomSpace homSpace(const Rep& m, const Rep& n) {
  requireSameAlgebra(m, n, "homSpace");
  const Field& f = m.field();
  const auto& q = m.algebra()->quiver();
  HomSpace h;
  h.dom_ = m;
  h.cod_ = n;
  h.offsets_.assign(m.vertexCount() + 1, 0);
  for (std::size_t v = 0; v < m.vertexCount(); ++v)
    h.offsets_[v + 1] = h.offsets_[v] + n.dim(v) * m.dim(v);
  const std::size_t unknowns = h.offsets_.back();
  std::size_t eqs = 0;
  for (const auto& arr : q.arrows) eqs += n.dim(arr.target) * m.dim(arr.source);

  // For a: i -> j the block N_a F_i - F_j M_a = 0.
  Mat sys(f, eqs, unknowns);
  withOps(f, [&](const auto& ops) {
    auto& s = storage(sys, ops);
    std::size_t row = 0;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      const std::size_t i = q.arrows[a].source, j = q.arrows[a].target;
      const auto& na = storage(n.arrow(a), ops);
      const auto& ma = storage(m.arrow(a), ops);
      const std::size_t dmi = m.dim(i), dmj = m.dim(j), dni = n.dim(i), dnj = n.dim(j);
      for (std::size_t r = 0; r < dnj; ++r)
        for (std::size_t c = 0; c < dmi; ++c, ++row) {
          auto* eq = &s[row * unknowns];
          for (std::size_t k = 0; k < dni; ++k) {
            const auto& coef = na[r * dni + k];
            if (!ops.isZero(coef)) eq[h.offsets_[i] + k * dmi + c] = ops.add(eq[h.offsets_[i] + k * dmi + c], coef);
          }
          for (std::size_t k = 0; k < dmj; ++k) {
            const auto& coef = ma[k * dmi + c];
            if (!ops.isZero(coef)) eq[h.offsets_[j] + r * dmj + k] = ops.sub(eq[h.offsets_[j] + r * dmj + k], coef);
          }
        }
    }
  });
  auto ns = nullSpace(sys);
  h.freeRows_ = std::move(ns.freeColumns);
  h.matrix_ = std::move(ns.basis);
  for (std::size_t k = 0; k < h.matrix_.cols(); ++k)
    h.basis_.push_back(uncheckedMor(m, n, unstack(h.matrix_, k, m, n)));
  return h;
}

std::vector<Mor> homBasis(const Rep& m, const Rep& n) { return homSpace(m, n).basis(); }

Mat HomSpace::vectorize(const Mor& f) const { return stack(f.maps(), dom_.field()); }

Mat HomSpace::coordinates(const Mor& f) const {
  Mat v = vectorize(f);
  Mat c = v.selectRows(freeRows_);
  if (matrix_ * c != v) throw InvariantViolation("HomSpace::coordinates: not a morphism M -> N");
  return c;
}

Mor HomSpace::combination(const Mat& c) const {
  if (c.rows() != dim() || c.cols() != 1)
    throw DimensionMismatch("HomSpace::combination: coefficient vector has wrong length");
  return uncheckedMor(dom_, cod_, unstack(matrix_ * c, 0, dom_, cod_));
}

Mat postComposeMatrix(const HomSpace& from, const HomSpace& to, const Mor& f) {
  Mat out(f.field(), to.dim(), from.dim());
  for (std::size_t k = 0; k < from.dim(); ++k) out.place(0, k, to.coordinates(f * from[k]));
  return out;
}

Mat preComposeMatrix(const HomSpace& from, const HomSpace& to, const Mor& f) {
  Mat out(f.field(), to.dim(), from.dim());
  for (std::size_t k = 0; k < from.dim(); ++k) out.place(0, k, to.coordinates(from[k] * f));
  return out;
}

std::optional<Mor> factorThrough(const Mor& t, const Mor& f) {
  if (!(t.codomain() == f.codomain())) throw DimensionMismatch("factorThrough: codomains differ");
  auto h = homSpace(t.domain(), f.domain());
  const Field& fld = t.field();
  Mat a(fld, stack(t.maps(), fld).rows(), h.dim());
  for (std::size_t k = 0; k < h.dim(); ++k) a.place(0, k, stack((f * h[k]).maps(), fld));
  auto x = solveAll(a, stack(t.maps(), fld));
  if (!x) return std::nullopt;
  return h.combination(*x);
}

std::optional<Mor> factorThroughSource(const Mor& t, const Mor& f) {
  if (!(t.domain() == f.domain())) throw DimensionMismatch("factorThroughSource: domains differ");
  auto h = homSpace(f.codomain(), t.codomain());
  const Field& fld = t.field();
  Mat a(fld, stack(t.maps(), fld).rows(), h.dim());
  for (std::size_t k = 0; k < h.dim(); ++k) a.place(0, k, stack((h[k] * f).maps(), fld));
  auto x = solveAll(a, stack(t.maps(), fld));
  if (!x) return std::nullopt;
  return h.combination(*x);
}

RepWithMor kernel(const Mor& f) { return carrier(kernelSub(f)); }
RepWithMor cokernel(const Mor& f) { return quotient(imageSub(f)); }

Image image(const Mor& f) {
  auto sub = imageSub(f);
  auto c = carrier(sub);
  std::vector<Mat> epi;
  for (std::size_t v = 0; v < f.maps().size(); ++v) epi.push_back(*sub.at(v).coordinates(f.at(v)));
  return {c.object, uncheckedMor(f.domain(), c.object, std::move(epi)), c.map};
}

DirectSum directSum(const AlgebraPtr& algebra, const std::vector<Rep>& summands) {
  for (const auto& s : summands)
    if (!sameAlgebra(s.algebra(), algebra)) throw AlgebraMismatch("directSum: mixed algebras");
  const Field& f = algebra->field();
  const auto& q = algebra->quiver();
  const std::size_t nv = algebra->vertexCount();
  std::vector<std::size_t> dims(nv, 0);
  for (const auto& s : summands)
    for (std::size_t v = 0; v < nv; ++v) dims[v] += s.dim(v);
  std::vector<Mat> arrows;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    std::vector<Mat> blocks;
    for (const auto& s : summands) blocks.push_back(s.arrow(a));
    Mat m(f, dims[q.arrows[a].target], dims[q.arrows[a].source]);
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
      m.place(r, c, b);
      r += b.rows();
      c += b.cols();
    }
    arrows.push_back(std::move(m));
  }
  DirectSum out;
  out.object = Rep(algebra, dims, std::move(arrows));
  std::vector<std::size_t> offset(nv, 0);
  for (const auto& s : summands) {
    std::vector<Mat> inj, proj;
    for (std::size_t v = 0; v < nv; ++v) {
      Mat i(f, dims[v], s.dim(v));
      i.place(offset[v], 0, Mat::identity(f, s.dim(v)));
      proj.push_back(i.transpose());
      inj.push_back(std::move(i));
      offset[v] += s.dim(v);
    }
    out.injections.push_back(uncheckedMor(s, out.object, std::move(inj)));
    out.projections.push_back(uncheckedMor(out.object, s, std::move(proj)));
  }
  return out;
}

Mor fromSum(const DirectSum& s, const std::vector<Mor>& components, const Rep& codomain) {
  if (components.size() != s.injections.size())
    throw DimensionMismatch("fromSum: one component per summand required");
  Mor out = Mor::zero(s.object, codomain);
  for (std::size_t k = 0; k < components.size(); ++k)
    out = out + components[k] * s.projections[k];
  return out;
}

Mor toSum(const DirectSum& s, const std::vector<Mor>& components, const Rep& domain) {
  if (components.size() != s.injections.size())
    throw DimensionMismatch("toSum: one component per summand required");
  Mor out = Mor::zero(domain, s.object);
  for (std::size_t k = 0; k < components.size(); ++k)
    out = out + s.injections[k] * components[k];
  return out;
}

Pullback pullback(const Mor& f, const Mor& g) {
  if (!(f.codomain() == g.codomain())) throw DimensionMismatch("pullback: codomains differ");
  auto s = directSum(f.domain().algebra(), {f.domain(), g.domain()});
  auto k = kernel(fromSum(s, {f, -g}, f.codomain()));
  return {k.object, s.projections[0] * k.map, s.projections[1] * k.map};
}

Pushout pushout(const Mor& f, const Mor& g) {
  if (!(f.domain() == g.domain())) throw DimensionMismatch("pushout: domains differ");
  auto s = directSum(f.domain().algebra(), {f.codomain(), g.codomain()});
  auto c = cokernel(toSum(s, {f, -g}, f.domain()));
  return {c.object, c.map * s.injections[0], c.map * s.injections[1]};
}

Rep dualize(const Rep& m, const AlgebraPtr& opposite) {
  if (!(opposite->spec() == m.algebra()->spec().opposite()))
    throw AlgebraMismatch("dualize: target is not the opposite algebra");
  std::vector<Mat> arrows;
  for (const auto& a : m.arrows()) arrows.push_back(a.transpose());
  return Rep(opposite, m.dims(), std::move(arrows));
}

Mor dualize(const Mor& f, const Rep& dualDomain, const Rep& dualCodomain) {
  std::vector<Mat> maps;
  for (const auto& x : f.maps()) maps.push_back(x.transpose());
  return Mor(dualDomain, dualCodomain, std::move(maps));
}

bool isMono(const Mor& f) {
  for (const auto& m : f.maps())
    if (rank(m) != m.cols()) return false;
  return true;
}

bool isEpi(const Mor& f) {
  for (const auto& m : f.maps())
    if (rank(m) != m.rows()) return false;
  return true;
}

bool isIsomorphism(const Mor& f) {
  for (const auto& m : f.maps())
    if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
  return true;
}

Mor inverseMor(const Mor& f) {
  std::vector<Mat> maps;
  for (const auto& m : f.maps()) {
    auto inv = inverse(m);
    if (!inv) throw InvariantViolation("inverseMor: not an isomorphism");
    maps.push_back(std::move(*inv));
  }
  return uncheckedMor(f.codomain(), f.domain(), std::move(maps));
}

IsoSearch findIso(const Rep& m, const Rep& n, std::uint64_t seed) {
  using S = IsoSearch::Status;
  requireSameAlgebra(m, n, "findIso");
  if (m.dims() != n.dims()) return {S::NotIsomorphic, std::nullopt};
  if (m.isZero()) return {S::Found, Mor::zero(m, n)};
  auto h = homSpace(m, n);
  if (h.dim() == 0) return {S::NotIsomorphic, std::nullopt};
  // Hom(X, -) and Hom(-, X) dimensions are isomorphism invariants.
  const std::size_t endM = homSpace(m, m).dim();
  if (homSpace(n, n).dim() != endM || h.dim() != endM || homSpace(n, m).dim() != endM)
    return {S::NotIsomorphic, std::nullopt};
  const Field& f = m.field();
  for (std::size_t k = 0; k < h.dim(); ++k)
    if (isIsomorphism(h[k])) return {S::Found, h[k]};

  constexpr std::uint64_t enumerationLimit = 1u << 14;
  if (!f.isRationals()) {
    std::uint64_t total = 1;
    bool small = true;
    for (std::size_t k = 0; k < h.dim() && small; ++k) {
      total *= f.characteristic();
      small = total <= enumerationLimit;
    }
    if (small) {
      std::vector<std::uint32_t> digits(h.dim(), 0);
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t x = idx;
        Mat c(f, h.dim(), 1);
        for (std::size_t k = 0; k < h.dim(); ++k) {
          c.set(k, 0, Scalar::fromResidue(f, static_cast<std::uint32_t>(x % f.characteristic())));
          x /= f.characteristic();
        }
        auto g = h.combination(c);
        if (isIsomorphism(g)) return {S::Found, g};
      }
      return {S::NotIsomorphic, std::nullopt};
    }
  }
  Rng rng(seed);
  constexpr int budget = 64;
  for (int t = 0; t < budget; ++t) {
    auto g = sampleMor(h, rng);
    if (isIsomorphism(g)) return {S::Found, g};
  }
  return {S::Inconclusive, std::nullopt};
}

Mor sampleMor(const HomSpace& hom, Rng& rng) {
  const Field& f = hom.domain().field();
  Mat c(f, hom.dim(), 1);
  for (std::size_t k = 0; k < hom.dim(); ++k) c.set(k, 0, rng.scalar(f));
  return hom.combination(c);
}

Mor sampleMor(const Rep& m, const Rep& n, Rng& rng) { return sampleMor(homSpace(m, n), rng); }

}  // namespace coreflect
