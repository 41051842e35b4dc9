#include "rootclust/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace rootclust {

bool box_less(const Box& a, const Box& b) {
  if (auto c = a.center.re <=> b.center.re; c != 0) return c < 0;
  if (auto c = a.center.im <=> b.center.im; c != 0) return c < 0;
  return a.width < b.width;
}

std::array<Box, 4> box_children(const Box& b) {
  const Dyadic q = b.width.mul_2exp(-2);
  const Dyadic h = b.width.mul_2exp(-1);
  const Dyadic& x = b.center.re;
  const Dyadic& y = b.center.im;
  return {Box{{x - q, y - q}, h}, Box{{x + q, y - q}, h}, Box{{x - q, y + q}, h},
          Box{{x + q, y + q}, h}};
}

Disc containing_disc(const Box& b) { return {b.center, b.width * Dyadic(3).mul_2exp(-2)}; }

namespace {

// Distance from v to the interval [lo, hi], zero inside.
Dyadic gap(const Dyadic& v, const Dyadic& lo, const Dyadic& hi) {
  if (v < lo) return lo - v;
  if (v > hi) return v - hi;
  return Dyadic();
}

}  // namespace

bool disc_intersects_box(const Disc& d, const Box& b) {
  Dyadic gx = gap(d.center.re, b.xmin(), b.xmax());
  Dyadic gy = gap(d.center.im, b.ymin(), b.ymax());
  return gx * gx + gy * gy <= d.radius * d.radius;
}

bool disc_inside_box(const Disc& d, const Box& b) {
  return d.center.re - d.radius >= b.xmin() && d.center.re + d.radius <= b.xmax() &&
         d.center.im - d.radius >= b.ymin() && d.center.im + d.radius <= b.ymax();
}

bool discs_intersect(const Disc& a, const Disc& b) {
  Dyadic dx = a.center.re - b.center.re;
  Dyadic dy = a.center.im - b.center.im;
  Dyadic r = a.radius + b.radius;
  return dx * dx + dy * dy <= r * r;
}

bool point_in_disc(const mpq_class& re, const mpq_class& im, const Disc& d) {
  mpq_class dx = re - d.center.re.to_rational();
  mpq_class dy = im - d.center.im.to_rational();
  mpq_class r = d.radius.to_rational();
  return dx * dx + dy * dy <= r * r;
}

ImagSign imaginary_sign(const Box& b) {
  if (b.ymin().sign() > 0) return ImagSign::positive;
  if (b.ymax().sign() < 0) return ImagSign::negative;
  return ImagSign::mixed;
}

Component::Component(std::vector<Box> boxes, const Box& roi) : boxes_(std::move(boxes)), roi_(roi) {
  if (boxes_.empty()) throw std::invalid_argument("empty component");
  std::sort(boxes_.begin(), boxes_.end(), box_less);
  boxes_.erase(std::unique(boxes_.begin(), boxes_.end()), boxes_.end());
  xmin_ = boxes_.front().xmin();
  xmax_ = boxes_.front().xmax();
  ymin_ = boxes_.front().ymin();
  ymax_ = boxes_.front().ymax();
  for (const Box& b : boxes_) {
    xmin_ = min(xmin_, b.xmin());
    xmax_ = max(xmax_, b.xmax());
    ymin_ = min(ymin_, b.ymin());
    ymax_ = max(ymax_, b.ymax());
  }
  Dyadic w = max(xmax_ - xmin_, ymax_ - ymin_);
  w = min(w, roi_.width);
  const Dyadic h = w.mul_2exp(-1);
  auto place = [&](const Dyadic& lo, const Dyadic& hi, const Dyadic& rlo, const Dyadic& rhi) {
    Dyadic c = (lo + hi).mul_2exp(-1);
    if (c - h < rlo) c = rlo + h;
    if (c + h > rhi) c = rhi - h;
    return c;
  };
  cbox_ = Box{{place(xmin_, xmax_, roi_.xmin(), roi_.xmax()), place(ymin_, ymax_, roi_.ymin(), roi_.ymax())},
              w};
}

ImagSign Component::imaginary_sign() const {
  if (ymin_.sign() > 0) return ImagSign::positive;
  if (ymax_.sign() < 0) return ImagSign::negative;
  return ImagSign::mixed;
}

ImagSign imaginary_sign(const Component& c) { return c.imaginary_sign(); }

bool Component::intersects(const Disc& d) const {
  // Quick reject against the bounding rectangle.
  Dyadic gx = gap(d.center.re, xmin_, xmax_);
  Dyadic gy = gap(d.center.im, ymin_, ymax_);
  if (gx * gx + gy * gy > d.radius * d.radius) return false;
  return std::any_of(boxes_.begin(), boxes_.end(),
                     [&](const Box& b) { return disc_intersects_box(d, b); });
}

Component Component::conj() const {
  std::vector<Box> mirrored;
  mirrored.reserve(boxes_.size());
  for (const Box& b : boxes_) mirrored.push_back(b.conj());
  return Component(std::move(mirrored), roi_.conj());
}

std::vector<Component> group_components(std::vector<Box> boxes, const Box& roi) {
  std::sort(boxes.begin(), boxes.end(), box_less);
  boxes.erase(std::unique(boxes.begin(), boxes.end()), boxes.end());
  const std::size_t n = boxes.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Dyadic& w = boxes[i].width;
      // Sorted by x, so once the x gap exceeds w no later box can touch i.
      if (boxes[j].center.re - boxes[i].center.re > w) break;
      if ((boxes[j].center.im - boxes[i].center.im).abs() <= w) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<Box>> groups;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = groups.size();
      groups.emplace_back();
    }
    groups[slot[r]].push_back(boxes[i]);
  }
  std::vector<Component> out;
  out.reserve(groups.size());
  for (auto& g : groups) out.emplace_back(std::move(g), roi);
  return out;
}

bool is_compact(const Component& c) { return c.width() <= c.box_width() * Dyadic(3); }

bool is_separated(const Component& c, const std::vector<const Component*>& others, const Box& roi) {
  Disc d4 = c.disc().dilated(Dyadic(4));
  if (!disc_inside_box(d4, roi.scaled_2exp(1))) return false;
  return std::none_of(others.begin(), others.end(),
                      [&](const Component* o) { return o->intersects(d4); });
}

ComponentPredicates component_predicates(const Component& c, const std::vector<const Component*>& others,
                                         const Box& roi) {
  return {is_compact(c), is_separated(c, others, roi)};
}

Component conjugate_closure(const Component& c) {
  if (c.imaginary_sign() != ImagSign::mixed) throw NotRealIntersecting();
  std::vector<Box> boxes = c.boxes();
  for (const Box& b : c.boxes()) boxes.push_back(b.conj());
  return Component(std::move(boxes), c.roi());
}

}  // namespace rootclust
