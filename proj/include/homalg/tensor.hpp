#pragma once

#include <string>
#include <vector>

#include "homalg/matrix.hpp"

namespace homalg {

/// One tensor factor: a tagged vector space with its dimension.  Tags are
/// only for diagnostics ('H', 'A', 'K', ...).
struct TensorFactor {
    char tag;
    Index dim;
};

/// Ordered basis of a tensor product X_1 (x) ... (x) X_k.  Flat indices are
/// lexicographic with the leftmost factor most significant; this order is
/// frozen — golden files and every codec in the library depend on it.
/// The empty product is the ground field (dimension 1).
class TensorBasis {
public:
    TensorBasis() = default;

    static TensorBasis single(char tag, Index dim) {
        TensorBasis b;
        b.append(tag, dim);
        return b;
    }
    static TensorBasis power(char tag, Index dim, int n) {
        TensorBasis b;
        for (int i = 0; i < n; ++i) b.append(tag, dim);
        return b;
    }

    void append(char tag, Index dim) {
        require(dim >= 1, "tensor factor must have dimension >= 1");
        factors_.push_back({tag, dim});
        total_ *= dim;
    }

    TensorBasis tensor(const TensorBasis& o) const {
        TensorBasis b = *this;
        for (const auto& f : o.factors_) b.append(f.tag, f.dim);
        return b;
    }

    Index total_dim() const { return total_; }
    std::size_t factor_count() const { return factors_.size(); }
    const TensorFactor& factor(std::size_t i) const { return factors_[i]; }

    Index flatten(const std::vector<Index>& multi) const {
        require(multi.size() == factors_.size(), "multi-index arity mismatch");
        Index flat = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            require(multi[i] >= 0 && multi[i] < factors_[i].dim, "multi-index out of range");
            flat = flat * factors_[i].dim + multi[i];
        }
        return flat;
    }

    std::vector<Index> unflatten(Index flat) const {
        require(flat >= 0 && flat < total_, "flat index out of range");
        std::vector<Index> multi(factors_.size());
        for (std::size_t i = factors_.size(); i-- > 0;) {
            multi[i] = flat % factors_[i].dim;
            flat /= factors_[i].dim;
        }
        return multi;
    }

    std::string to_string() const {
        if (factors_.empty()) return "K";
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += "*";
            s += factors_[i].tag;
            s += std::to_string(factors_[i].dim);
        }
        return s;
    }

    bool same_dims(const TensorBasis& o) const { return total_ == o.total_; }

private:
    std::vector<TensorFactor> factors_;
    Index total_ = 1;
};

}  // namespace homalg
