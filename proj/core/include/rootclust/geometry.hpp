#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "rootclust/dyadic.hpp"

namespace rootclust {

/// Closed axis-aligned square with exact dyadic center and width.
struct Box {
  DyadicComplex center;
  Dyadic width;

  Dyadic xmin() const { return center.re - width.mul_2exp(-1); }
  Dyadic xmax() const { return center.re + width.mul_2exp(-1); }
  Dyadic ymin() const { return center.im - width.mul_2exp(-1); }
  Dyadic ymax() const { return center.im + width.mul_2exp(-1); }
  /// Same center, width scaled by 2^k.
  Box scaled_2exp(long k) const { return {center, width.mul_2exp(k)}; }
  Box conj() const { return {center.conj(), width}; }

  friend bool operator==(const Box&, const Box&) = default;
};

/// Lexicographic order on (center.re, center.im, width).
bool box_less(const Box& a, const Box& b);

/// Closed disc D(center, radius).
struct Disc {
  DyadicComplex center;
  Dyadic radius;

  /// delta * Disc: same center, radius scaled by an integer or dyadic factor.
  Disc dilated(const Dyadic& factor) const { return {center, radius * factor}; }
  Disc conj() const { return {center.conj(), radius}; }

  friend bool operator==(const Disc&, const Disc&) = default;
};

/// The four children (a +- w/4) + i(b +- w/4) of width w/2, ordered
/// (-,-), (+,-), (-,+), (+,+).
std::array<Box, 4> box_children(const Box& b);

/// D(center(b), 3/4 w(b)).
Disc containing_disc(const Box& b);

/// Exact closed-set tests.
bool disc_intersects_box(const Disc& d, const Box& b);
bool disc_inside_box(const Disc& d, const Box& b);
bool discs_intersect(const Disc& a, const Disc& b);
bool point_in_disc(const mpq_class& re, const mpq_class& im, const Disc& d);

enum class ImagSign { positive, negative, mixed };

/// positive iff every point has Im > 0, negative iff every point has Im < 0.
ImagSign imaginary_sign(const Box& b);

class NotRealIntersecting : public std::logic_error {
 public:
  NotRealIntersecting() : std::logic_error("component does not meet the real axis") {}
};

/// A connected set of equal-width boxes inside a region of interest,
/// together with its component box: the smallest square containing every
/// box, centered on their bounding rectangle and shifted to stay inside
/// the region.
class Component {
 public:
  Component(std::vector<Box> boxes, const Box& roi);

  const std::vector<Box>& boxes() const { return boxes_; }
  const Dyadic& box_width() const { return boxes_.front().width; }
  const Box& component_box() const { return cbox_; }
  const Box& roi() const { return roi_; }
  Dyadic width() const { return cbox_.width; }
  /// Containing disc of the component box.
  Disc disc() const { return containing_disc(cbox_); }

  Dyadic xmin() const { return xmin_; }
  Dyadic xmax() const { return xmax_; }
  Dyadic ymin() const { return ymin_; }
  Dyadic ymax() const { return ymax_; }

  ImagSign imaginary_sign() const;
  bool intersects(const Disc& d) const;
  /// Mirror image across the real axis.
  Component conj() const;

 private:
  std::vector<Box> boxes_;
  Box roi_;
  Box cbox_;
  Dyadic xmin_, xmax_, ymin_, ymax_;
};

ImagSign imaginary_sign(const Component& c);

/// Partitions equal-width boxes into maximal groups whose closures connect
/// (edge or corner contact). Components are ordered by their smallest box.
std::vector<Component> group_components(std::vector<Box> boxes, const Box& roi);

struct ComponentPredicates {
  bool is_compact = false;
  bool is_separated = false;
};

/// is_compact: w(C) <= 3 * box width. is_separated: 4*Delta(C) misses every
/// component in `others` and lies inside 2*roi.
ComponentPredicates component_predicates(const Component& c, const std::vector<const Component*>& others,
                                         const Box& roi);
bool is_compact(const Component& c);
bool is_separated(const Component& c, const std::vector<const Component*>& others, const Box& roi);

/// C united with its mirror image; throws NotRealIntersecting when C lies
/// strictly above or below the real axis.
Component conjugate_closure(const Component& c);

}  // namespace rootclust
