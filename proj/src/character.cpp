#include "jsums/character.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace jsums {

Character chi_pow(const Field& f, Character a, long long k) {
  const long long n = f.n();
  long long km = k % n;
  if (km < 0) km += n;
  return {static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.j % n) * km) % n)};
}

std::uint32_t chi_order(const Field& f, Character a) {
  const std::uint32_t n = f.n();
  return n / std::gcd(a.j % n, n);
}

Character char_of_order(const Field& f, std::uint32_t n) {
  if (n == 0 || f.n() % n != 0) {
    throw std::invalid_argument("no character of order " + std::to_string(n) + " in F_" +
                                std::to_string(f.q()));
  }
  return {(f.n() / n) % f.n()};
}

long long orthogonality_sum(const Field& f, std::uint32_t x, std::uint32_t n) {
  if (n == 0 || f.n() % n != 0) {
    throw std::invalid_argument("orthogonality_sum: order must divide q-1");
  }
  if (x == 0) return 1;
  return f.dlog(x) % n == 0 ? n : 0;
}

}  // namespace jsums
