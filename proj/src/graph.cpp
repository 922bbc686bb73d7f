#include "circulant/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>

namespace circ {

namespace {

std::vector<std::pair<Int, Int>> normalize_entries(Int modulus, std::vector<std::pair<Int, Int>> raw) {
  if (modulus < 2) throw usage_error("connection multiset modulus must be at least 2");
  std::map<Int, Int> merged;
  for (const auto& [e, m] : raw) {
    if (m < 1) throw usage_error("connection multiplicities must be at least 1");
    const Int r = mod_norm(e, modulus);
    if (r == 0) throw usage_error("connection elements must be nonzero mod n");
    merged[r] = checked_add(merged[r], m);
  }
  return {merged.begin(), merged.end()};
}

}  // namespace

ConnectionMultiset::ConnectionMultiset(Int modulus, const std::vector<Int>& elements)
    : modulus_(modulus) {
  std::vector<std::pair<Int, Int>> raw;
  raw.reserve(elements.size());
  for (Int e : elements) raw.emplace_back(e, 1);
  entries_ = normalize_entries(modulus, std::move(raw));
}

ConnectionMultiset::ConnectionMultiset(Int modulus, std::vector<std::pair<Int, Int>> entries)
    : modulus_(modulus), entries_(normalize_entries(modulus, std::move(entries))) {}

Int ConnectionMultiset::size() const {
  Int total = 0;
  for (const auto& [e, m] : entries_) total = checked_add(total, m);
  return total;
}

std::vector<Int> ConnectionMultiset::elements() const {
  std::vector<Int> out;
  for (const auto& [e, m] : entries_)
    for (Int i = 0; i < m; ++i) out.push_back(e);
  return out;
}

ConnectionMultiset ConnectionMultiset::scaled(Int factor) const {
  std::vector<std::pair<Int, Int>> raw;
  raw.reserve(entries_.size());
  for (const auto& [e, m] : entries_) raw.emplace_back(mod_norm(checked_mul(factor, e), modulus_), m);
  return ConnectionMultiset(modulus_, std::move(raw));
}

bool ConnectionMultiset::is_undirected() const { return scaled(-1) == *this; }

bool ConnectionMultiset::is_simple() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& em) { return em.second == 1; });
}

CirculantGraph::CirculantGraph(Int modulus, ConnectionMultiset connections)
    : modulus_(modulus), connections_(std::move(connections)) {
  if (connections_.modulus() != modulus_) throw usage_error("graph and connection moduli differ");
}

CirculantGraph parse_graph(std::string_view text) {
  std::size_t pos = 0;

  auto parse_int = [&](const char* what) -> Int {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw parse_error(std::string("expected ") + what, start);
    Int value = 0;
    for (std::size_t i = start; i < pos; ++i) {
      if (value > (INT64_MAX - 9) / 10) throw parse_error("integer out of range", start);
      value = value * 10 + (text[i] - '0');
    }
    return value;
  };

  const Int n = parse_int("a modulus");
  if (n < 2) throw parse_error("modulus must be at least 2", 0);
  if (pos >= text.size() || text[pos] != ':') throw parse_error("expected ':'", pos);
  ++pos;

  std::vector<std::pair<Int, Int>> raw;
  while (true) {
    const std::size_t element_start = pos;
    const Int e = parse_int("a connection element");
    if (mod_norm(e, n) == 0) throw parse_error("connection element is 0 mod n", element_start);
    Int mult = 1;
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      mult = parse_int("a multiplicity");
      if (mult < 1) throw parse_error("multiplicity must be at least 1", pos);
    }
    raw.emplace_back(e, mult);
    if (pos >= text.size()) break;
    if (text[pos] != ',') throw parse_error("expected ',' or end of input", pos);
    ++pos;
  }
  return CirculantGraph(n, ConnectionMultiset(n, std::move(raw)));
}

std::string format_graph(const CirculantGraph& g) {
  std::string out = std::to_string(g.modulus());
  out += ':';
  bool first = true;
  for (const auto& [e, m] : g.connections().entries()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(e);
    if (m > 1) {
      out += '*';
      out += std::to_string(m);
    }
  }
  return out;
}

namespace {

void append_le64(std::string& out, Int v) {
  auto u = static_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<char>(u & 0xff));
    u >>= 8;
  }
}

std::string encode_value(const CyclotomicValue& v) {
  std::string out;
  out.reserve(v.coeffs().size() * 8);
  for (Int c : v.coeffs()) append_le64(out, c);
  return out;
}

}  // namespace

Spectrum::Spectrum(Int modulus, std::vector<CyclotomicValue> eigenvalues)
    : modulus_(modulus), eigenvalues_(std::move(eigenvalues)) {
  if (eigenvalues_.size() != static_cast<std::size_t>(modulus_))
    throw usage_error("a spectrum has exactly n eigenvalues");
  std::vector<std::string> encoded;
  encoded.reserve(eigenvalues_.size());
  for (const auto& v : eigenvalues_) encoded.push_back(encode_value(v));
  std::sort(encoded.begin(), encoded.end());
  canonical_key_.reserve(encoded.size() * (encoded.empty() ? 0 : encoded.front().size()));
  for (const auto& s : encoded) canonical_key_ += s;
}

std::string Spectrum::canonical_key_hex() const {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(canonical_key_.size() * 2);
  for (unsigned char b : canonical_key_) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

Spectrum spectrum(const CirculantGraph& g) {
  const Int n = g.modulus();
  std::vector<CyclotomicValue> values;
  values.reserve(static_cast<std::size_t>(n));
  std::vector<Int> poly(static_cast<std::size_t>(n));
  for (Int x = 0; x < n; ++x) {
    std::fill(poly.begin(), poly.end(), 0);
    for (const auto& [e, m] : g.connections().entries()) {
      const Int idx = (x * e) % n;
      Int& slot = poly[static_cast<std::size_t>(idx)];
      slot = checked_add(slot, m);
    }
    values.emplace_back(n, detail::remainder_mod_cyclotomic(poly, n));
  }
  return Spectrum(n, std::move(values));
}

bool isospectral(const Spectrum& s1, const Spectrum& s2) {
  return s1.modulus() == s2.modulus() && s1.canonical_key() == s2.canonical_key();
}

bool isospectral(const CirculantGraph& g1, const CirculantGraph& g2) {
  if (g1.modulus() != g2.modulus()) return false;
  return isospectral(spectrum(g1), spectrum(g2));
}

bool has_repeated_eigenvalues(const Spectrum& s) {
  // canonical_key holds the sorted fixed-width remainder vectors, so repeats
  // show up as equal adjacent slices.
  const std::size_t width = s.canonical_key().size() / static_cast<std::size_t>(s.modulus());
  const std::string& key = s.canonical_key();
  for (std::size_t i = width; i < key.size(); i += width)
    if (key.compare(i, width, key, i - width, width) == 0) return true;
  return false;
}

bool has_repeated_eigenvalues(const CirculantGraph& g) { return has_repeated_eigenvalues(spectrum(g)); }

std::vector<std::vector<Int>> adjacency_matrix(const CirculantGraph& g, Int max_vertices) {
  const Int n = g.modulus();
  if (n > max_vertices)
    throw resource_error("adjacency matrix of order " + std::to_string(n) + " exceeds the bound " +
                         std::to_string(max_vertices));
  std::vector<std::vector<Int>> m(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), 0));
  for (Int i = 0; i < n; ++i)
    for (const auto& [e, mult] : g.connections().entries())
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>((i + e) % n)] = mult;
  return m;
}

bool numeric_spectrum_crosscheck(const CirculantGraph& g, double tolerance) {
  if (!(tolerance > 0)) throw usage_error("tolerance must be positive");
  const Int n = g.modulus();
  std::vector<std::complex<double>> omega(static_cast<std::size_t>(n));
  for (Int k = 0; k < n; ++k)
    omega[static_cast<std::size_t>(k)] =
        std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));

  const Spectrum s = spectrum(g);
  double worst = 0.0;
  for (Int x = 0; x < n; ++x) {
    std::complex<double> direct{0.0, 0.0};
    for (const auto& [e, m] : g.connections().entries())
      direct += static_cast<double>(m) * omega[static_cast<std::size_t>((x * e) % n)];
    std::complex<double> embedded{0.0, 0.0};
    const auto& coeffs = s.eigenvalues()[static_cast<std::size_t>(x)].coeffs();
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      embedded += static_cast<double>(coeffs[k]) * omega[k % static_cast<std::size_t>(n)];
    worst = std::max(worst, std::abs(direct - embedded));
  }
  return worst < tolerance;
}

}  // namespace circ
