#include "circmagic/labeling.h"

#include <charconv>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace circmagic {

Labeling::Labeling(std::vector<Int> values) : values_(std::move(values)) {
  const Int n = static_cast<Int>(values_.size());
  if (n == 0) throw DomainError("labeling must be nonempty");
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (size_t x = 0; x < values_.size(); ++x) {
    const Int v = values_[x];
    if (v < 1 || v > n) {
      throw DomainError("labeling is not a bijection onto {1.." + std::to_string(n) +
                        "}: vertex " + std::to_string(x) + " has label " + std::to_string(v));
    }
    if (seen[static_cast<size_t>(v)]) {
      throw DomainError("labeling is not a bijection: label " + std::to_string(v) +
                        " used twice");
    }
    seen[static_cast<size_t>(v)] = true;
  }
}

std::optional<Int> verify(const Circulant& g, const Labeling& l) {
  if (g.n() != l.n()) {
    throw DomainError("verify: labeling has " + std::to_string(l.n()) +
                      " entries but the graph has order " + std::to_string(g.n()));
  }
  const auto offsets = g.offsets();
  std::optional<Int> kappa;
  for (Int v = 0; v < g.n(); ++v) {
    Int w = 0;
    for (Int s : offsets) w += l(v + s);
    if (!kappa) {
      kappa = w;
    } else if (*kappa != w) {
      return std::nullopt;
    }
  }
  return kappa;
}

Int magic_constant(const Circulant& g) { return g.valency() * (g.n() + 1) / 2; }

Labeling transport_labeling(const Labeling& l_t, const ConnectionSet& s, const ConnectionSet& t,
                            Int q) {
  if (l_t.n() != t.n() || s.n() != t.n()) throw DomainError("transport_labeling: order mismatch");
  if (gcd(mod(q, s.n()), s.n()) != 1 || multiply(s, q) != t) {
    throw DomainError("transport_labeling: " + std::to_string(q) + " does not map " +
                      s.to_string() + " onto " + t.to_string());
  }
  std::vector<Int> values(static_cast<size_t>(s.n()));
  for (Int x = 0; x < s.n(); ++x) values[static_cast<size_t>(x)] = l_t(mul_mod(q, x, s.n()));
  return Labeling(std::move(values));
}

size_t CoordinateScaffold::index(Int x) const {
  const Int r = mod(x, n_);
  if (r % step_ != 0) {
    throw DomainError("scaffold: " + std::to_string(x) + " is not in <" + std::to_string(step_) +
                      ">");
  }
  return static_cast<size_t>(r / step_);
}

CoordinateScaffold build_scaffold(Int n, Int step, Int lambda, Int mu, Int rows, Int cols) {
  if (n < 1 || step < 1 || n % step != 0) {
    throw DomainError("build_scaffold: step " + std::to_string(step) + " must divide n = " +
                      std::to_string(n));
  }
  const Int h = n / step;
  if (rows < 1 || cols < 1 || rows * cols != h) {
    throw DomainError("build_scaffold: rows * cols must equal |H| = " + std::to_string(h));
  }
  CoordinateScaffold sc;
  sc.n_ = n;
  sc.step_ = step;
  sc.lambda_ = mod(lambda, n);
  sc.mu_ = mod(mu, n);
  sc.rows_ = rows;
  sc.cols_ = cols;
  sc.zeta_.assign(static_cast<size_t>(h), -1);
  sc.xi_.assign(static_cast<size_t>(h), -1);
  for (Int xi = 0; xi < cols; ++xi) {
    for (Int zeta = 0; zeta < rows; ++zeta) {
      const Int x = mod(mul_mod(zeta, sc.lambda_, n) + mul_mod(xi, sc.mu_, n), n);
      if (x % step != 0) {
        throw DomainError("build_scaffold: coordinate map leaves <" + std::to_string(step) + ">");
      }
      const auto i = static_cast<size_t>(x / step);
      if (sc.zeta_[i] != -1) {
        throw DomainError("build_scaffold: coordinate map is not injective (lambda = " +
                          std::to_string(lambda) + ", mu = " + std::to_string(mu) + ")");
      }
      sc.zeta_[i] = zeta;
      sc.xi_[i] = xi;
    }
  }
  return sc;
}

std::string labeling_to_json(const Labeling& l) { return nlohmann::json(l.values()).dump(); }

std::string labeling_to_csv(const Labeling& l) {
  std::ostringstream out;
  out << "vertex,label\n";
  for (Int x = 0; x < l.n(); ++x) out << x << "," << l(x) << "\n";
  return out.str();
}

Labeling labeling_from_json(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text.begin(), text.end());
  if (!j.is_array()) throw std::invalid_argument("labeling JSON must be an array of integers");
  return Labeling(j.get<std::vector<Int>>());
}

Labeling labeling_from_csv(std::string_view text) {
  std::vector<std::pair<Int, Int>> rows;
  size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("labeling CSV line " + std::to_string(line_no) +
                                  ": expected vertex,label");
    }
    Int vx = 0, lb = 0;
    auto a = line.substr(0, comma), b = line.substr(comma + 1);
    auto ra = std::from_chars(a.data(), a.data() + a.size(), vx);
    auto rb = std::from_chars(b.data(), b.data() + b.size(), lb);
    if (ra.ec != std::errc() || rb.ec != std::errc() || ra.ptr != a.data() + a.size() ||
        rb.ptr != b.data() + b.size()) {
      if (rows.empty() && line_no == 1) continue;  // header
      throw std::invalid_argument("labeling CSV line " + std::to_string(line_no) +
                                  ": bad integer");
    }
    rows.emplace_back(vx, lb);
  }
  std::vector<Int> values(rows.size(), 0);
  for (auto [vx, lb] : rows) {
    if (vx < 0 || vx >= static_cast<Int>(rows.size()) || values[static_cast<size_t>(vx)] != 0) {
      throw std::invalid_argument("labeling CSV: vertices must be 0..n-1, each exactly once");
    }
    values[static_cast<size_t>(vx)] = lb;
  }
  return Labeling(std::move(values));
}

Labeling labeling_from_text(std::string_view text) {
  for (char ch : text) {
    if (ch == ' ' || ch == '\n' || ch == '\r' || ch == '\t') continue;
    return ch == '[' ? labeling_from_json(text) : labeling_from_csv(text);
  }
  throw std::invalid_argument("empty labeling input");
}

}  // namespace circmagic
