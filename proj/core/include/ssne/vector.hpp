#ifndef SSNE_VECTOR_HPP
#define SSNE_VECTOR_HPP

#include <vector>

namespace ssne {

// Points of the ambient space R^n. Components must stay finite; the
// routines below throw std::invalid_argument on dimension mismatch.
using Vector = std::vector<double>;

double inner(const Vector& x, const Vector& y);
double norm_sq(const Vector& x);
double norm(const Vector& x);
double distance(const Vector& x, const Vector& y);

Vector add(const Vector& x, const Vector& y);
Vector sub(const Vector& x, const Vector& y);
Vector scaled(const Vector& x, double a);

// y += a*x
void axpy_into(Vector& y, double a, const Vector& x);

bool all_finite(const Vector& x);

}  // namespace ssne

#endif
