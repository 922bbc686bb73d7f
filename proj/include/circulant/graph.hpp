#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circulant/cyclotomic.hpp"

namespace circ {

// Connection multiset of a circulant graph: a multiset of nonzero residues
// mod n. Entries are (exponent, multiplicity) pairs with strictly increasing
// exponents in [1, n) and multiplicities >= 1.
class ConnectionMultiset {
 public:
  // Elements are reduced mod n and merged; a residue of 0 is rejected.
  ConnectionMultiset(Int modulus, const std::vector<Int>& elements);
  ConnectionMultiset(Int modulus, std::vector<std::pair<Int, Int>> entries);

  Int modulus() const { return modulus_; }
  const std::vector<std::pair<Int, Int>>& entries() const { return entries_; }

  // Total size counting multiplicity.
  Int size() const;
  // Flattened sorted elements, repeated per multiplicity.
  std::vector<Int> elements() const;
  // The multiset q*S mod n.
  ConnectionMultiset scaled(Int factor) const;
  // S = -S as multisets: every edge has a reverse companion.
  bool is_undirected() const;
  // No multiplicities above 1.
  bool is_simple() const;

  friend bool operator==(const ConnectionMultiset&, const ConnectionMultiset&) = default;
  friend bool operator<(const ConnectionMultiset& a, const ConnectionMultiset& b) {
    return a.entries_ < b.entries_;
  }

 private:
  Int modulus_;
  std::vector<std::pair<Int, Int>> entries_;
};

// Directed circulant multigraph on Z_n: vertex i points to i + s for every
// s in the connection multiset, with edge multiplicities. Undirectedness is a
// property (S = -S), not a constraint.
class CirculantGraph {
 public:
  CirculantGraph(Int modulus, ConnectionMultiset connections);

  Int modulus() const { return modulus_; }
  const ConnectionMultiset& connections() const { return connections_; }
  Int degree() const { return connections_.size(); }

  friend bool operator==(const CirculantGraph&, const CirculantGraph&) = default;

 private:
  Int modulus_;
  ConnectionMultiset connections_;
};

// Text format: "<n>:<e1[*m1]>,<e2[*m2]>,...", e.g. "12:1,5,11" or "5:3*2".
// Elements are reduced mod n, zero residues rejected, duplicates merged.
CirculantGraph parse_graph(std::string_view text);
std::string format_graph(const CirculantGraph& g);

// The exact spectrum of a circulant graph: entry x is the eigenvalue
// lambda_x = sum over s in S of omega^(x*s), held as a canonical remainder.
// canonical_key() is a multiset fingerprint: the n remainder vectors encoded
// fixed-width little-endian and sorted lexicographically, so two spectra are
// equal as multisets iff their keys are byte-identical.
class Spectrum {
 public:
  Spectrum(Int modulus, std::vector<CyclotomicValue> eigenvalues);

  Int modulus() const { return modulus_; }
  const std::vector<CyclotomicValue>& eigenvalues() const { return eigenvalues_; }
  const CyclotomicValue& at(Int index) const {
    return eigenvalues_[static_cast<std::size_t>(mod_norm(index, modulus_))];
  }
  const std::string& canonical_key() const { return canonical_key_; }
  std::string canonical_key_hex() const;

 private:
  Int modulus_;
  std::vector<CyclotomicValue> eigenvalues_;
  std::string canonical_key_;
};

Spectrum spectrum(const CirculantGraph& g);

// Equality of eigenvalue multisets; graphs of different orders are never
// isospectral (their spectra have different cardinality).
bool isospectral(const CirculantGraph& g1, const CirculantGraph& g2);
bool isospectral(const Spectrum& s1, const Spectrum& s2);

bool has_repeated_eigenvalues(const CirculantGraph& g);
bool has_repeated_eigenvalues(const Spectrum& s);

// Dense adjacency matrix; entry (i, j) is the multiplicity of j - i mod n.
// Guarded by a vertex-count bound to cap memory.
std::vector<std::vector<Int>> adjacency_matrix(const CirculantGraph& g, Int max_vertices = 4096);

// Evaluates every exact eigenvalue at omega = e^(2*pi*i/n) and compares with
// the directly summed floating-point eigenvalue. Validation only; never a
// source of truth for equality decisions.
bool numeric_spectrum_crosscheck(const CirculantGraph& g, double tolerance);

}  // namespace circ
