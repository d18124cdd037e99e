#include "creach/ca.hpp"

#include <charconv>
#include <stdexcept>

namespace creach {

std::string to_string(const Bits& b) {
  std::string s(b.len, '0');
  for (int i = 0; i < b.len; ++i) s[i] = char('0' + b.bit(i));
  return s;
}

Bits parse_bits(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("configuration is empty");
  if (s.size() > kMaxCells)
    throw std::invalid_argument("configuration longer than " + std::to_string(kMaxCells) + " cells");
  Bits b{0, static_cast<int>(s.size())};
  for (char c : s) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("configuration must be over {0,1}: got '" + std::string(1, c) + "'");
    b.val = b.val << 1 | static_cast<u128>(c - '0');
  }
  return b;
}

std::vector<Rmt> valid_rmts(int i, int n) {
  if (n < 1 || i < 0 || i >= n) throw std::out_of_range("cell index outside lattice");
  if (n == 1) return {0, 2};
  if (i == 0) return {0, 1, 2, 3};
  if (i == n - 1) return {0, 2, 4, 6};
  return {0, 1, 2, 3, 4, 5, 6, 7};
}

static void check_rmt_pair(Rmt r, Rmt s) {
  if (r < 0 || r > 7 || s < 0 || s > 7) throw std::out_of_range("RMT outside 0..7");
  if (r == s) throw std::invalid_argument("RMT compared with itself");
}

bool are_sibling(Rmt r, Rmt s) {
  check_rmt_pair(r, s);
  return (r >> 1) == (s >> 1);
}

bool are_equivalent(Rmt r, Rmt s) {
  check_rmt_pair(r, s);
  return (2 * r & 7) == (2 * s & 7);
}

std::vector<Rmt> rmt_sequence(const Configuration& c) {
  std::vector<Rmt> out(c.len);
  int r = c.bit(0);  // (0, x0)
  for (int i = 0; i < c.len; ++i) {
    int z = i + 1 < c.len ? c.bit(i + 1) : 0;
    r = (r << 1 | z) & 7;
    out[i] = r;
  }
  return out;
}

void check_lattice(const RuleVector& rv, const Configuration& c) {
  if (rv.empty()) throw std::invalid_argument("rule vector is empty");
  if (static_cast<int>(rv.size()) != c.len)
    throw std::invalid_argument("configuration length " + std::to_string(c.len) +
                                " does not match rule vector size " + std::to_string(rv.size()));
}

u64 evolve_value(const RuleVector& rv, u64 x, int n) {
  u64 y = 0;
  int r = static_cast<int>(x >> (n - 1)) & 1;
  for (int i = 0; i < n; ++i) {
    int z = i + 1 < n ? static_cast<int>(x >> (n - 2 - i)) & 1 : 0;
    r = (r << 1 | z) & 7;
    y = y << 1 | static_cast<u64>(rv[i].code >> r & 1);
  }
  return y;
}

u128 evolve_value128(const RuleVector& rv, u128 x, int n) {
  u128 y = 0;
  int r = static_cast<int>(x >> (n - 1)) & 1;
  for (int i = 0; i < n; ++i) {
    int z = i + 1 < n ? static_cast<int>(x >> (n - 2 - i)) & 1 : 0;
    r = (r << 1 | z) & 7;
    y = y << 1 | static_cast<u128>(rv[i].code >> r & 1);
  }
  return y;
}

Configuration evolve(const RuleVector& rv, const Configuration& c) {
  check_lattice(rv, c);
  return {evolve_value128(rv, c.val, c.len), c.len};
}

Configuration evolve_t(const RuleVector& rv, const Configuration& c, u64 t) {
  check_lattice(rv, c);
  Configuration x = c;
  for (u64 k = 0; k < t; ++k) x.val = evolve_value128(rv, x.val, x.len);
  return x;
}

RuleVector parse_rule_vector(std::string_view text) {
  RuleVector rv;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    int code = -1;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), code);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || code < 0 || code > 255)
      throw std::invalid_argument("rule must be an integer in 0..255: got '" + std::string(tok) + "'");
    rv.push_back(Rule{static_cast<std::uint8_t>(code)});
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (rv.size() > kMaxCells)
    throw std::invalid_argument("rule vector longer than " + std::to_string(kMaxCells) + " cells");
  return rv;
}

std::string to_string(const RuleVector& rv) {
  std::string s;
  for (std::size_t i = 0; i < rv.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(rv[i].code);
  }
  return s;
}

Configuration parse_configuration(std::string_view text) { return parse_bits(text); }

}  // namespace creach
