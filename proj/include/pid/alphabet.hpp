#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pid/errors.hpp"

namespace pid {

/// Ordered finite set of outcome labels for one variable. The construction
/// order is canonical: it fixes tensor indexing and serialization order.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
        if (labels_.empty()) {
            throw InvalidAlphabet("alphabet must contain at least one label");
        }
        index_.reserve(labels_.size());
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            auto [it, inserted] = index_.emplace(labels_[i], i);
            (void)it;
            if (!inserted) {
                throw InvalidAlphabet("duplicate label '" + labels_[i] + "'");
            }
        }
    }

    std::size_t size() const { return labels_.size(); }

    const std::string& label(std::size_t i) const { return labels_.at(i); }

    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<std::size_t> find(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t index(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) {
            throw UnknownLabel("label '" + label + "' is not in the alphabet");
        }
        return it->second;
    }

    bool operator==(const Alphabet& other) const { return labels_ == other.labels_; }
    bool operator!=(const Alphabet& other) const { return !(*this == other); }

    /// Alphabet of pairs, with labels "(a,b)". Used by system products and
    /// the copy gate whose output ranges over input pairs.
    static Alphabet paired(const Alphabet& a, const Alphabet& b) {
        std::vector<std::string> labels;
        labels.reserve(a.size() * b.size());
        for (const auto& la : a.labels()) {
            for (const auto& lb : b.labels()) {
                labels.push_back("(" + la + "," + lb + ")");
            }
        }
        return Alphabet(std::move(labels));
    }

    /// Convenience alphabet {"0", "1", ..., "n-1"}.
    static Alphabet indexed(std::size_t n) {
        std::vector<std::string> labels;
        labels.reserve(n);
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
        return Alphabet(std::move(labels));
    }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
};

} // namespace pid
