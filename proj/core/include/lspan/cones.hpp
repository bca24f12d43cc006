#pragma once

#include <memory>

namespace lspan {

// Partition of R^d \ {0} into cones, each of angular diameter at most angle.
// d = 1: the two half-lines. d = 2: sectors [j angle, (j + 1) angle) by polar
// angle in [0, 2 pi), the last one possibly narrower. d >= 3: the 2^d orthant
// cones of the cross-polytope, each bisected along its widest generator pair
// until every cone is narrow enough; lookup descends the bisection tree.
class ConeFamily {
 public:
  ConeFamily(int d, double angle);
  ~ConeFamily();
  ConeFamily(ConeFamily&&) noexcept;
  ConeFamily& operator=(ConeFamily&&) noexcept;

  int dimension() const { return d_; }
  double angle() const { return angle_; }
  int size() const { return count_; }
  // Cone containing direction dir (d coordinates); the zero vector maps to 0.
  int cone_of(const double* dir) const;

 private:
  struct Tree;
  int d_ = 0;
  double angle_ = 0.0;
  int count_ = 0;
  std::unique_ptr<Tree> tree_;
};

// Largest cone width theta with 1 / (cos theta - sin theta) <= 1 + epsBase.
double yao_cone_angle(double epsBase);

}  // namespace lspan
