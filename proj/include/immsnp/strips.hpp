#pragma once

// Border strips, outside decompositions, cutting strips and the # operator.

#include <optional>
#include <string>
#include <vector>

#include "immsnp/combinatorics.hpp"
#include "immsnp/immanant.hpp"

namespace immsnp {

enum class Step { Right, Up };
char to_char(Step s);

// A border strip held as its boxes ordered from the starting box (lowest
// content) to the ending box. steps[k] is the move from box k to box k+1.
class Strip {
 public:
  // Validates that consecutive boxes differ by one step right or one step up.
  explicit Strip(std::vector<Cell> boxes);
  // The strip with the given content range and step sequence, placed so that
  // its normalized shape starts in column 1 of its lowest row.
  static Strip from_steps(int start_content, const std::vector<Step>& steps);

  const std::vector<Cell>& boxes() const { return boxes_; }
  const std::vector<Step>& steps() const { return steps_; }
  int start_content() const { return boxes_.front().content(); }
  int end_content() const { return boxes_.back().content(); }
  int size() const { return static_cast<int>(boxes_.size()); }
  // Translated skew shape with the top row at row 1 and the leftmost box in column 1.
  SkewShape shape() const;
  std::string to_string() const;

 private:
  std::vector<Cell> boxes_;
  std::vector<Step> steps_;
};

class OutsideDecomposition {
 public:
  // Strips may be given in any order; they are stored by decreasing end
  // content. Throws unless the strips form an outside decomposition.
  OutsideDecomposition(SkewShape shape, std::vector<Strip> strips);

  const SkewShape& shape() const { return shape_; }
  const std::vector<Strip>& strips() const { return strips_; }
  int count() const { return static_cast<int>(strips_.size()); }
  const Strip& operator[](int i) const { return strips_[static_cast<std::size_t>(i)]; }

 private:
  SkewShape shape_;
  std::vector<Strip> strips_;
};

// Diagonal hooks of lambda.
OutsideDecomposition giambelli_decomposition(const Partition& lambda);
// Nonempty rows of the shape, each as one strip.
OutsideDecomposition row_decomposition(const SkewShape& shape);

class CuttingStrip {
 public:
  CuttingStrip(int min_content, std::vector<Step> steps);
  int min_content() const { return min_content_; }
  int max_content() const { return min_content_ + static_cast<int>(steps_.size()); }
  // Direction of the move from content c-1 to content c, for min < c <= max.
  Step direction(int c) const;
  const std::vector<Step>& steps() const { return steps_; }
  // The segment with contents [p, q]; requires min <= p <= q <= max.
  Strip segment(int p, int q) const;
  Strip as_strip() const { return segment(min_content(), max_content()); }

 private:
  int min_content_;
  std::vector<Step> steps_;
};

// Directions come from the strips that cross each diagonal. A diagonal step
// that no strip crosses takes the direction implied by the perimeter sides of
// the adjacent ending and starting boxes, and Right when nothing decides it.
CuttingStrip cutting_strip(const OutsideDecomposition& pi);

struct SharpResult {
  enum class Kind { Shape, Empty, Undefined };
  Kind kind;
  int p;
  int q;
  std::optional<Strip> strip;
  std::string to_string() const;
};

SharpResult sharp(const Strip& theta_i, const Strip& theta_j, const CuttingStrip& phi);

// Entry (i,j) is the skew Schur polynomial of theta_i # theta_j, with Empty
// giving 1 and Undefined giving 0.
PolynomialMatrix hamel_goulden_matrix(const OutsideDecomposition& pi, int nvars);

}  // namespace immsnp
