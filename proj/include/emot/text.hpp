#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace emot {

// 64-bit FNV-1a. Used wherever the artifact needs a hash that is stable
// across platforms and builds (stub generation, loci grid positions,
// cache digests). std::hash gives no such guarantee.
uint64_t fnv1a64(std::string_view bytes);
uint64_t fnv1a64(std::string_view bytes, uint64_t basis);

// Lowercase, split on non-alphanumeric runs, drop tokens shorter than
// two characters. Keeps stopwords; most callers want tokenize() below.
std::vector<std::string> raw_tokens(const std::string& text);

// raw_tokens with the fixed stopword list removed.
std::vector<std::string> tokenize(const std::string& text);

bool is_stopword(const std::string& token);

// Sparse term-weight vector keyed by term. std::map keeps iteration
// order deterministic for serialization and dot products.
using SparseVec = std::map<std::string, double>;

double sparse_norm(const SparseVec& v);

// L2-normalizes in place; a zero vector stays zero.
void sparse_normalize(SparseVec& v);

// Unit-normalized term-count vector of a single text. Equivalent to a
// one-document tf-idf vector (idf is uniformly 1 for one document).
SparseVec normalized_term_counts(const std::string& text);

// Term counts restricted to the given vocabulary, then normalized.
SparseVec normalized_term_counts_in_space(const std::string& text, const SparseVec& space);

// Dot product over shared keys. Inputs are expected unit-or-zero norm,
// so this is cosine similarity; either vector zero gives 0.
double sparse_cosine(const SparseVec& a, const SparseVec& b);

std::vector<std::string> split_lines(const std::string& text);
std::string trim(const std::string& s);
std::string to_lower(std::string s);

// Fixed-precision decimal formatting (printf "%.Nf"), used for all
// numbers that end up in traces and reports.
std::string format_double(double value, int decimals);

}  // namespace emot
