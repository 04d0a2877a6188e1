#pragma once

#include <string>
#include <utility>
#include <vector>

namespace emot {

// Fitted tf-idf vocabulary. Vocabulary order is lexicographic so the
// vector layout is identical across runs regardless of corpus order.
struct TfIdfModel {
    std::vector<std::string> vocabulary;
    int document_count = 0;
    std::vector<int> doc_frequencies;

    // ln((1 + N) / (1 + df)) + 1
    double idf(size_t term_index) const;

    // tf * idf over the fitted vocabulary, L2-normalized. A document
    // with no in-vocabulary terms maps to the zero vector.
    std::vector<double> transform(const std::string& text) const;
};

// Fits on the corpus and returns the per-document vectors.
// Throws EmptyCorpus on an empty corpus.
std::pair<TfIdfModel, std::vector<std::vector<double>>> tfidf_fit_transform(
    const std::vector<std::string>& corpus);

// 1 - dot(u, v) / (|u| * |v|); a zero vector against anything is 1 by
// convention. Throws DimensionMismatch on unequal lengths.
double cosine_distance(const std::vector<double>& u, const std::vector<double>& v);

double cosine_similarity(const std::vector<double>& u, const std::vector<double>& v);

}  // namespace emot
