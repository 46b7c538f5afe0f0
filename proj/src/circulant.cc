#include "circmagic/circulant.h"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace circmagic {
namespace {

Int normalize_rep(Int s, Int n) {
  Int r = mod(s, n);
  return std::min(r, n - r);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

Int parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("cannot parse connection set '" + std::string(whole) +
                                "': bad integer '" + std::string(s) + "'");
  }
  return value;
}

// Normalized sorted tuple of q*reps; T is std::array<Int,3> or std::vector<Int>.
std::array<Int, 3> scaled_triple(const std::array<Int, 3>& reps, Int q, Int n) {
  std::array<Int, 3> t{};
  for (int i = 0; i < 3; ++i) t[i] = normalize_rep(mul_mod(reps[i], q, n), n);
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

ParsedSet parse_set_text(std::string_view text) {
  std::string_view whole = text;
  text = trim(text);
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("cannot parse connection set '" + std::string(whole) +
                                "': expected n:a,b,...");
  }
  ParsedSet out;
  out.n = parse_int(text.substr(0, colon), whole);
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    auto comma = rest.find(',');
    out.elems.push_back(parse_int(rest.substr(0, comma), whole));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

ConnectionSet::ConnectionSet(Int n, std::array<Int, 3> elems) : n_(n), reps_{}, connected_(false) {
  if (n < 7) throw DomainError("connection set order must be at least 7, got " + std::to_string(n));
  for (int i = 0; i < 3; ++i) {
    Int r = mod(elems[i], n);
    if (r == 0 || 2 * r == n) {
      throw DomainError("degenerate set: element " + std::to_string(elems[i]) +
                        " is 0 or n/2 modulo " + std::to_string(n));
    }
    reps_[i] = normalize_rep(r, n);
  }
  std::sort(reps_.begin(), reps_.end());
  if (reps_[0] == reps_[1] || reps_[1] == reps_[2]) {
    throw DomainError("degenerate set: elements collide after normalization modulo " +
                      std::to_string(n));
  }
  connected_ = std::gcd(std::gcd(std::gcd(reps_[0], reps_[1]), reps_[2]), n) == 1;
}

std::array<Int, 6> ConnectionSet::elements() const {
  return {reps_[0], n_ - reps_[0], reps_[1], n_ - reps_[1], reps_[2], n_ - reps_[2]};
}

std::array<Int, 6> ConnectionSet::neighbors(Int v) const {
  std::array<Int, 6> out{};
  for (int i = 0; i < 3; ++i) {
    out[2 * i] = mod(v + reps_[i], n_);
    out[2 * i + 1] = mod(v - reps_[i], n_);
  }
  return out;
}

bool ConnectionSet::contains(Int s) const {
  Int r = mod(s, n_);
  if (r == 0) return false;
  Int rep = std::min(r, n_ - r);
  return std::find(reps_.begin(), reps_.end(), rep) != reps_.end();
}

std::string ConnectionSet::to_string() const {
  return std::to_string(n_) + ":" + std::to_string(reps_[0]) + "," + std::to_string(reps_[1]) +
         "," + std::to_string(reps_[2]);
}

ConnectionSet ConnectionSet::parse(std::string_view text) {
  ParsedSet p = parse_set_text(text);
  if (p.elems.size() != 3) {
    throw std::invalid_argument("valency-6 connection set needs exactly 3 elements, got " +
                                std::to_string(p.elems.size()) + " in '" + std::string(text) + "'");
  }
  return ConnectionSet(p.n, {p.elems[0], p.elems[1], p.elems[2]});
}

ConnectionSet multiply(const ConnectionSet& s, Int q) {
  if (std::gcd(mod(q, s.n()), s.n()) != 1) {
    throw DomainError("multiply: " + std::to_string(q) + " is not a unit modulo " +
                      std::to_string(s.n()));
  }
  const auto& r = s.reps();
  return ConnectionSet(s.n(), {mul_mod(r[0], q, s.n()), mul_mod(r[1], q, s.n()),
                               mul_mod(r[2], q, s.n())});
}

ConnectionSet canonical_form(const ConnectionSet& s) {
  const Int n = s.n();
  std::array<Int, 3> best = s.reps();
  for (Int q = 2; q < n; ++q) {
    if (std::gcd(q, n) != 1) continue;
    auto t = scaled_triple(s.reps(), q, n);
    if (t < best) best = t;
  }
  return ConnectionSet(n, best);
}

bool multiplier_equivalent(const ConnectionSet& x, const ConnectionSet& y) {
  return x.n() == y.n() && canonical_form(x) == canonical_form(y);
}

std::vector<Int> stabilizer(const ConnectionSet& s) {
  std::vector<Int> out;
  for (Int q : units(s.n())) {
    if (scaled_triple(s.reps(), q, s.n()) == s.reps()) out.push_back(q);
  }
  return out;
}

std::vector<ConnectionSet> enumerate_sets(Int n) {
  if (n < 7) throw DomainError("enumerate_sets: n must be at least 7");
  const std::vector<Int> us = units(n);
  std::vector<ConnectionSet> out;
  for (Int a = 1; 2 * a < n; ++a) {
    for (Int b = a + 1; 2 * b < n; ++b) {
      const Int gab = std::gcd(std::gcd(a, b), n);
      for (Int c = b + 1; 2 * c < n; ++c) {
        if (std::gcd(gab, c) != 1) continue;
        const std::array<Int, 3> reps{a, b, c};
        bool minimal = true;
        for (Int q : us) {
          if (q == 1 || q == n - 1) continue;
          if (scaled_triple(reps, q, n) < reps) {
            minimal = false;
            break;
          }
        }
        if (minimal) out.emplace_back(n, reps);
      }
    }
  }
  return out;
}

Circulant::Circulant(Int n, std::vector<Int> reps) : n_(n), reps_() {
  if (n < 3) throw DomainError("circulant order must be at least 3");
  if (reps.empty()) throw DomainError("circulant needs at least one connection element");
  for (Int s : reps) {
    Int r = mod(s, n);
    if (r == 0 || 2 * r == n) {
      throw DomainError("degenerate set: element " + std::to_string(s) + " is 0 or n/2 modulo " +
                        std::to_string(n));
    }
    reps_.push_back(normalize_rep(r, n));
  }
  std::sort(reps_.begin(), reps_.end());
  if (std::adjacent_find(reps_.begin(), reps_.end()) != reps_.end()) {
    throw DomainError("degenerate set: elements collide after normalization modulo " +
                      std::to_string(n));
  }
}

Circulant::Circulant(const ConnectionSet& s)
    : n_(s.n()), reps_(s.reps().begin(), s.reps().end()) {}

std::vector<Int> Circulant::offsets() const {
  std::vector<Int> out;
  out.reserve(2 * reps_.size());
  for (Int s : reps_) {
    out.push_back(s);
    out.push_back(n_ - s);
  }
  return out;
}

std::vector<Int> Circulant::neighbors(Int v) const {
  std::vector<Int> out;
  out.reserve(2 * reps_.size());
  for (Int s : reps_) {
    out.push_back(mod(v + s, n_));
    out.push_back(mod(v - s, n_));
  }
  return out;
}

std::string Circulant::to_string() const {
  std::string out = std::to_string(n_) + ":";
  for (size_t i = 0; i < reps_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(reps_[i]);
  }
  return out;
}

Circulant Circulant::parse(std::string_view text) {
  ParsedSet p = parse_set_text(text);
  return Circulant(p.n, std::move(p.elems));
}

}  // namespace circmagic
