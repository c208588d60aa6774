#include "qbw/series.hpp"

#include <stdexcept>

namespace qbw {

std::string to_string(SeriesVar v) {
  switch (v) {
    case SeriesVar::Q: return "q";
    case SeriesVar::U: return "u";
    case SeriesVar::Aux: return "t";
  }
  return "?";
}

TruncSeries::TruncSeries(SeriesVar var, int order) : var_(var), order_(order) {
  if (order < 0) throw std::domain_error("negative series order");
  c_.assign(static_cast<std::size_t>(order) + 1, RatFunc());
}

TruncSeries TruncSeries::constant(const RatFunc& c, SeriesVar var, int order) {
  TruncSeries s(var, order);
  s.set_coefficient(0, c);
  return s;
}

TruncSeries TruncSeries::variable(SeriesVar var, int order) {
  TruncSeries s(var, order);
  if (order >= 1) s.c_[1] = RatFunc(1);
  return s;
}

void TruncSeries::check_coefficient(const RatFunc& c) const {
  bool bad = false;
  if (var_ == SeriesVar::Q) {
    bad = c.num().degree_q() > 0 || c.den().degree_q() > 0;
  } else if (var_ == SeriesVar::U) {
    bad = c.num().degree_u() > 0 || c.den().degree_u() > 0;
  }
  if (bad) throw std::domain_error("series coefficient contains the expansion variable");
}

const RatFunc& TruncSeries::coefficient(int i) const {
  if (i < 0 || i > order_) throw std::out_of_range("series coefficient index");
  return c_[static_cast<std::size_t>(i)];
}

void TruncSeries::set_coefficient(int i, RatFunc c) {
  if (i < 0 || i > order_) throw std::out_of_range("series coefficient index");
  check_coefficient(c);
  c_[static_cast<std::size_t>(i)] = std::move(c);
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  if (var_ != o.var_ || order_ != o.order_) {
    throw std::domain_error("series shape mismatch");
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  if (var_ != o.var_ || order_ != o.order_) {
    throw std::domain_error("series shape mismatch");
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  if (a.var_ != b.var_ || a.order_ != b.order_) {
    throw std::domain_error("series shape mismatch");
  }
  TruncSeries r(a.var_, a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    const RatFunc& ca = a.c_[static_cast<std::size_t>(i)];
    if (ca.is_zero()) continue;
    for (int j = 0; i + j <= a.order_; ++j) {
      const RatFunc& cb = b.c_[static_cast<std::size_t>(j)];
      if (cb.is_zero()) continue;
      r.c_[static_cast<std::size_t>(i + j)] += ca * cb;
    }
  }
  return r;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (RatFunc& c : r.c_) c = -c;
  return r;
}

TruncSeries TruncSeries::scaled(const RatFunc& c) const {
  TruncSeries r = *this;
  for (RatFunc& x : r.c_) x *= c;
  return r;
}

TruncSeries TruncSeries::shifted(int k) const {
  if (k < 0) throw std::domain_error("negative series shift");
  TruncSeries r(var_, order_);
  for (int i = 0; i + k <= order_; ++i) {
    r.c_[static_cast<std::size_t>(i + k)] = c_[static_cast<std::size_t>(i)];
  }
  return r;
}

TruncSeries TruncSeries::pow(unsigned e) const {
  TruncSeries r = constant(RatFunc(1), var_, order_);
  TruncSeries b = *this;
  while (e > 0) {
    if (e & 1U) r = r * b;
    b = b * b;
    e >>= 1U;
  }
  return r;
}

TruncSeries TruncSeries::inverse() const {
  if (c_[0].is_zero()) throw std::domain_error("series inverse with zero constant term");
  TruncSeries r(var_, order_);
  const RatFunc inv0 = c_[0].inverse();
  r.c_[0] = inv0;
  for (int i = 1; i <= order_; ++i) {
    RatFunc acc;
    for (int j = 1; j <= i; ++j) {
      const RatFunc& cj = c_[static_cast<std::size_t>(j)];
      if (cj.is_zero()) continue;
      acc += cj * r.c_[static_cast<std::size_t>(i - j)];
    }
    r.c_[static_cast<std::size_t>(i)] = -(acc * inv0);
  }
  return r;
}

TruncSeries TruncSeries::expand(const RatFunc& f, SeriesVar var, int order) {
  if (var == SeriesVar::Aux) {
    throw std::domain_error("cannot expand a rational function in the auxiliary variable");
  }
  const bool in_q = var == SeriesVar::Q;
  const std::vector<BiPoly> nc = in_q ? f.num().coeffs_in_q() : f.num().coeffs_in_u();
  const std::vector<BiPoly> dc = in_q ? f.den().coeffs_in_q() : f.den().coeffs_in_u();
  if (dc.empty() || dc[0].is_zero()) {
    throw PoleError("pole at origin", f.den().str());
  }
  const RatFunc d0 = RatFunc(dc[0]);
  TruncSeries r(var, order);
  for (int i = 0; i <= order; ++i) {
    RatFunc acc = i < static_cast<int>(nc.size()) ? RatFunc(nc[static_cast<std::size_t>(i)])
                                                  : RatFunc();
    for (int j = 1; j <= i && j < static_cast<int>(dc.size()); ++j) {
      if (dc[static_cast<std::size_t>(j)].is_zero()) continue;
      acc -= RatFunc(dc[static_cast<std::size_t>(j)]) * r.c_[static_cast<std::size_t>(i - j)];
    }
    r.c_[static_cast<std::size_t>(i)] = acc / d0;
  }
  return r;
}

std::string TruncSeries::str() const {
  const std::string v = to_string(var_);
  std::string s;
  bool first = true;
  for (int i = 0; i <= order_; ++i) {
    const RatFunc& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) s += " + ";
    first = false;
    s += "(" + c.str() + ")";
    if (i >= 1) {
      s += "*" + v;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  if (first) s = "0";
  s += " + O(" + v + "^" + std::to_string(order_ + 1) + ")";
  return s;
}

}  // namespace qbw
