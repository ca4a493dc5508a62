#include "logburn/dyadic.hpp"

#include "logburn/error.hpp"

#include <algorithm>
#include <cctype>

namespace logburn {

Dyadic::Dyadic(BigInt num, std::uint32_t exp2) : num_(std::move(num)), exp2_(exp2) {
  canonicalize();
}

void Dyadic::canonicalize() {
  if (num_.is_zero()) {
    exp2_ = 0;
    return;
  }
  while (exp2_ > 0 && !bit_test(num_, 0)) {
    num_ >>= 1;
    --exp2_;
  }
}

Dyadic Dyadic::half() const {
  if (num_.is_zero()) return {};
  if (!bit_test(num_, 0)) {
    Dyadic r;
    r.num_ = num_ / 2;
    r.exp2_ = exp2_;
    return r;
  }
  Dyadic r;
  r.num_ = num_;
  r.exp2_ = exp2_ + 1;
  return r;
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.num_ = -r.num_;
  return r;
}

Dyadic& Dyadic::operator+=(const Dyadic& o) {
  if (exp2_ == o.exp2_) {
    num_ += o.num_;
  } else if (exp2_ > o.exp2_) {
    num_ += BigInt(o.num_) << (exp2_ - o.exp2_);
  } else {
    num_ = (num_ << (o.exp2_ - exp2_)) + o.num_;
    exp2_ = o.exp2_;
  }
  canonicalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& o) { return *this += -o; }

Dyadic& Dyadic::operator*=(const Dyadic& o) {
  num_ *= o.num_;
  exp2_ += o.exp2_;
  canonicalize();
  return *this;
}

std::string Dyadic::str() const {
  std::string s = num_.str();
  if (exp2_ != 0) s += "/2^" + std::to_string(exp2_);
  return s;
}

Dyadic Dyadic::parse(std::string_view text) {
  auto bad = [&] { return ArgumentError("malformed dyadic number '" + std::string(text) + "'"); };
  std::size_t slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::size_t digits_from = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
  if (num.size() <= digits_from) throw bad();
  if (!std::all_of(num.begin() + static_cast<long>(digits_from), num.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; }))
    throw bad();
  BigInt p(std::string(num[0] == '+' ? num.substr(1) : num));
  std::uint32_t k = 0;
  if (slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    if (den.size() < 3 || den.substr(0, 2) != "2^") throw bad();
    den.remove_prefix(2);
    if (den.size() > 9 || !std::all_of(den.begin(), den.end(), [](unsigned char c) {
          return std::isdigit(c) != 0;
        }))
      throw bad();
    k = static_cast<std::uint32_t>(std::stoul(std::string(den)));
  }
  return Dyadic(std::move(p), k);
}

}  // namespace logburn
