#include "immsnp/strips.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "immsnp/symmetric.hpp"

namespace immsnp {

char to_char(Step s) { return s == Step::Right ? 'R' : 'U'; }

Strip::Strip(std::vector<Cell> boxes) : boxes_(std::move(boxes)) {
  if (boxes_.empty()) throw Error("strip: no boxes");
  for (std::size_t k = 0; k + 1 < boxes_.size(); ++k) {
    const Cell& a = boxes_[k];
    const Cell& b = boxes_[k + 1];
    if (b.row == a.row && b.col == a.col + 1)
      steps_.push_back(Step::Right);
    else if (b.row == a.row - 1 && b.col == a.col)
      steps_.push_back(Step::Up);
    else
      throw Error("strip: boxes (" + std::to_string(a.row) + "," + std::to_string(a.col) + ") and (" +
                  std::to_string(b.row) + "," + std::to_string(b.col) + ") are not adjacent right/up");
  }
}

Strip Strip::from_steps(int start_content, const std::vector<Step>& steps) {
  int ups = static_cast<int>(std::count(steps.begin(), steps.end(), Step::Up));
  Cell cur{ups + 1, start_content + ups + 1};
  std::vector<Cell> boxes{cur};
  for (Step s : steps) {
    if (s == Step::Right)
      ++cur.col;
    else
      --cur.row;
    boxes.push_back(cur);
  }
  return Strip(std::move(boxes));
}

SkewShape Strip::shape() const {
  int top = boxes_.back().row;
  int left = boxes_.front().col;
  int nrows = boxes_.front().row - top + 1;
  std::vector<int> outer(static_cast<std::size_t>(nrows)), inner(static_cast<std::size_t>(nrows));
  std::vector<int> lo(static_cast<std::size_t>(nrows), 1 << 30), hi(static_cast<std::size_t>(nrows), -(1 << 30));
  for (const Cell& c : boxes_) {
    std::size_t r = static_cast<std::size_t>(c.row - top);
    lo[r] = std::min(lo[r], c.col - left + 1);
    hi[r] = std::max(hi[r], c.col - left + 1);
  }
  for (std::size_t r = 0; r < outer.size(); ++r) {
    outer[r] = hi[r];
    inner[r] = lo[r] - 1;
  }
  return SkewShape(Partition(outer), Partition(inner));
}

std::string Strip::to_string() const {
  std::string s = "[" + std::to_string(start_content()) + "," + std::to_string(end_content()) + "] ";
  for (Step st : steps_) s += to_char(st);
  return s + " " + shape().to_string();
}

namespace {

bool starts_on_perimeter(const SkewShape& s, Cell c) {
  return !s.contains({c.row, c.col - 1}) || !s.contains({c.row + 1, c.col});
}

bool ends_on_perimeter(const SkewShape& s, Cell c) {
  return !s.contains({c.row, c.col + 1}) || !s.contains({c.row - 1, c.col});
}

}  // namespace

OutsideDecomposition::OutsideDecomposition(SkewShape shape, std::vector<Strip> strips)
    : shape_(std::move(shape)), strips_(std::move(strips)) {
  std::set<Cell> seen;
  for (const Strip& st : strips_)
    for (const Cell& c : st.boxes()) {
      if (!shape_.contains(c))
        throw Error("outside decomposition: box (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                    ") is not in " + shape_.to_string());
      if (!seen.insert(c).second)
        throw Error("outside decomposition: box (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                    ") is covered twice");
    }
  if (static_cast<int>(seen.size()) != shape_.size())
    throw Error("outside decomposition: strips do not cover " + shape_.to_string());
  std::set<int> ends;
  for (const Strip& st : strips_) {
    if (!starts_on_perimeter(shape_, st.boxes().front()))
      throw Error("outside decomposition: strip " + st.to_string() + " does not start on the left or bottom perimeter");
    if (!ends_on_perimeter(shape_, st.boxes().back()))
      throw Error("outside decomposition: strip " + st.to_string() + " does not end on the right or top perimeter");
    if (!ends.insert(st.end_content()).second)
      throw Error("outside decomposition: two strips end on content " + std::to_string(st.end_content()));
  }
  std::stable_sort(strips_.begin(), strips_.end(),
                   [](const Strip& a, const Strip& b) { return a.end_content() > b.end_content(); });
}

OutsideDecomposition giambelli_decomposition(const Partition& lambda) {
  if (lambda.empty()) throw Error("giambelli_decomposition: empty partition");
  Partition conj = conjugate(lambda);
  std::vector<Strip> strips;
  for (int i = 1; i <= rank(lambda); ++i) {
    std::vector<Cell> boxes;
    for (int r = conj[static_cast<std::size_t>(i - 1)]; r > i; --r) boxes.push_back({r, i});
    for (int c = i; c <= lambda[static_cast<std::size_t>(i - 1)]; ++c) boxes.push_back({i, c});
    strips.emplace_back(std::move(boxes));
  }
  return OutsideDecomposition(SkewShape(lambda), std::move(strips));
}

OutsideDecomposition row_decomposition(const SkewShape& shape) {
  std::vector<Strip> strips;
  for (int i = 0; i < shape.rows(); ++i) {
    if (shape.row_length(i) == 0) continue;
    std::vector<Cell> boxes;
    for (int c = shape.inner()[static_cast<std::size_t>(i)] + 1; c <= shape.outer()[static_cast<std::size_t>(i)]; ++c)
      boxes.push_back({i + 1, c});
    strips.emplace_back(std::move(boxes));
  }
  return OutsideDecomposition(shape, std::move(strips));
}

CuttingStrip::CuttingStrip(int min_content, std::vector<Step> steps)
    : min_content_(min_content), steps_(std::move(steps)) {}

Step CuttingStrip::direction(int c) const {
  if (c <= min_content_ || c > max_content())
    throw Error("cutting strip: no step into content " + std::to_string(c));
  return steps_[static_cast<std::size_t>(c - min_content_ - 1)];
}

Strip CuttingStrip::segment(int p, int q) const {
  if (p < min_content_ || q > max_content() || p > q)
    throw Error("cutting strip: segment [" + std::to_string(p) + "," + std::to_string(q) + "] out of range");
  std::vector<Step> steps(steps_.begin() + (p - min_content_), steps_.begin() + (q - min_content_));
  return Strip::from_steps(p, steps);
}

CuttingStrip cutting_strip(const OutsideDecomposition& pi) {
  const SkewShape& s = pi.shape();
  std::vector<Cell> cells = s.cells();
  if (cells.empty()) throw Error("cutting_strip: empty shape");
  int lo = cells.front().content(), hi = lo;
  for (const Cell& c : cells) {
    lo = std::min(lo, c.content());
    hi = std::max(hi, c.content());
  }
  // Evidence per target content c: the step from c-1 to c.
  std::map<int, std::set<Step>> inside, perimeter;
  for (const Strip& st : pi.strips()) {
    for (std::size_t k = 0; k < st.steps().size(); ++k)
      inside[st.boxes()[k + 1].content()].insert(st.steps()[k]);
    const Cell& e = st.boxes().back();
    bool right = !s.contains({e.row, e.col + 1});
    bool top = !s.contains({e.row - 1, e.col});
    if (right != top) perimeter[e.content() + 1].insert(right ? Step::Right : Step::Up);
    const Cell& b = st.boxes().front();
    bool left = !s.contains({b.row, b.col - 1});
    bool bottom = !s.contains({b.row + 1, b.col});
    if (left != bottom) perimeter[b.content()].insert(left ? Step::Right : Step::Up);
  }
  std::vector<Step> steps;
  for (int c = lo + 1; c <= hi; ++c) {
    const std::set<Step>* ev = nullptr;
    if (auto it = inside.find(c); it != inside.end())
      ev = &it->second;
    else if (auto jt = perimeter.find(c); jt != perimeter.end())
      ev = &jt->second;
    if (ev && ev->size() > 1)
      throw Error("cutting_strip: boxes on diagonal " + std::to_string(c) + " disagree on direction");
    steps.push_back(ev ? *ev->begin() : Step::Right);
  }
  return CuttingStrip(lo, std::move(steps));
}

std::string SharpResult::to_string() const {
  std::string range = "[" + std::to_string(p) + "," + std::to_string(q) + "]";
  switch (kind) {
    case Kind::Shape: return range + "=" + strip->shape().to_string();
    case Kind::Empty: return range + "=empty";
    default: return range + "=undefined";
  }
}

SharpResult sharp(const Strip& theta_i, const Strip& theta_j, const CuttingStrip& phi) {
  SharpResult r{SharpResult::Kind::Undefined, theta_j.start_content(), theta_i.end_content(), std::nullopt};
  if (r.p <= r.q) {
    r.kind = SharpResult::Kind::Shape;
    r.strip = phi.segment(r.p, r.q);
  } else if (r.p == r.q + 1) {
    r.kind = SharpResult::Kind::Empty;
  }
  return r;
}

PolynomialMatrix hamel_goulden_matrix(const OutsideDecomposition& pi, int nvars) {
  CuttingStrip phi = cutting_strip(pi);
  int k = pi.count();
  PolynomialMatrix m(k, nvars);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      SharpResult r = sharp(pi[i], pi[j], phi);
      if (r.kind == SharpResult::Kind::Shape)
        m.set(i, j, ssyt_schur(r.strip->shape(), nvars));
      else if (r.kind == SharpResult::Kind::Empty)
        m.set(i, j, SparsePolynomial::constant(nvars, 1));
    }
  return m;
}

}  // namespace immsnp
