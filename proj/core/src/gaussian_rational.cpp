#include "cpf/gaussian_rational.hpp"

#include "cpf/error.hpp"

namespace cpf {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::rational(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  return {mpq_class(num, den)};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error("division by zero coefficient");
  const mpq_class norm = re_ * re_ + im_ * im_;
  return {mpq_class(re_ / norm), mpq_class(-im_ / norm)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::to_string() const {
  if (is_real()) return re_.get_str();
  return "(" + re_.get_str() + ")+(" + im_.get_str() + ")i";
}

}  // namespace cpf
