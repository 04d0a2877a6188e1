#include "emot/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "emot/errors.hpp"
#include "emot/text.hpp"

namespace emot {

double TfIdfModel::idf(size_t term_index) const {
    return std::log((1.0 + document_count) / (1.0 + doc_frequencies[term_index])) + 1.0;
}

std::vector<double> TfIdfModel::transform(const std::string& text) const {
    std::vector<double> vec(vocabulary.size(), 0.0);
    std::map<std::string, int> counts;
    for (const auto& tok : tokenize(text)) counts[tok] += 1;
    double norm_sq = 0.0;
    for (size_t i = 0; i < vocabulary.size(); ++i) {
        auto it = counts.find(vocabulary[i]);
        if (it == counts.end()) continue;
        vec[i] = it->second * idf(i);
        norm_sq += vec[i] * vec[i];
    }
    if (norm_sq > 0.0) {
        const double norm = std::sqrt(norm_sq);
        for (auto& x : vec) x /= norm;
    }
    return vec;
}

std::pair<TfIdfModel, std::vector<std::vector<double>>> tfidf_fit_transform(
    const std::vector<std::string>& corpus) {
    if (corpus.empty()) raise(ErrorCode::EmptyCorpus, "tf-idf needs at least one document");

    std::vector<std::vector<std::string>> docs;
    docs.reserve(corpus.size());
    std::set<std::string> vocab_set;
    for (const auto& text : corpus) {
        docs.push_back(tokenize(text));
        for (const auto& tok : docs.back()) vocab_set.insert(tok);
    }

    TfIdfModel model;
    model.vocabulary.assign(vocab_set.begin(), vocab_set.end());
    model.document_count = static_cast<int>(corpus.size());
    model.doc_frequencies.assign(model.vocabulary.size(), 0);

    std::map<std::string, size_t> index;
    for (size_t i = 0; i < model.vocabulary.size(); ++i) index[model.vocabulary[i]] = i;

    for (const auto& toks : docs) {
        std::set<std::string> seen(toks.begin(), toks.end());
        for (const auto& t : seen) model.doc_frequencies[index[t]] += 1;
    }

    std::vector<std::vector<double>> vectors;
    vectors.reserve(corpus.size());
    for (const auto& text : corpus) vectors.push_back(model.transform(text));
    return {std::move(model), std::move(vectors)};
}

double cosine_similarity(const std::vector<double>& u, const std::vector<double>& v) {
    if (u.size() != v.size())
        raise(ErrorCode::DimensionMismatch, "vectors of length " + std::to_string(u.size()) +
                                                " and " + std::to_string(v.size()));
    double dot = 0.0, nu = 0.0, nv = 0.0;
    for (size_t i = 0; i < u.size(); ++i) {
        dot += u[i] * v[i];
        nu += u[i] * u[i];
        nv += v[i] * v[i];
    }
    if (nu == 0.0 || nv == 0.0) return 0.0;
    return dot / (std::sqrt(nu) * std::sqrt(nv));
}

double cosine_distance(const std::vector<double>& u, const std::vector<double>& v) {
    return 1.0 - cosine_similarity(u, v);
}

}  // namespace emot
