#include "wsc/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wsc {

WeylGroup::WeylGroup(const RootDatum& rd, const LeviDatum& levi, std::size_t size_bound)
    : levi_(levi), degree_(rd.rank()) {
    if (rd.family == Family::OSP && rd.n > 0 && levi.full)
        raise(ErrorCode::UnsupportedFamily,
              "signed-permutation Weyl groups (osp even part) are not implemented");

    std::size_t order = 1;
    for (auto [start, end] : levi_.block_ranges) {
        for (std::size_t k = 2; k <= end - start; ++k) {
            order *= k;
            if (order > size_bound)
                raise(ErrorCode::GroupTooLarge,
                      "Weyl group exceeds the bound of " + std::to_string(size_bound));
        }
    }

    // enumerate blockwise, lexicographically in the one-line word
    Perm id(degree_);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> current{id};
    for (auto [start, end] : levi_.block_ranges) {
        std::vector<std::vector<std::uint8_t>> block_perms;
        std::vector<std::uint8_t> block(end - start);
        std::iota(block.begin(), block.end(), static_cast<std::uint8_t>(start));
        do {
            block_perms.push_back(block);
        } while (std::next_permutation(block.begin(), block.end()));
        std::vector<Perm> next;
        next.reserve(current.size() * block_perms.size());
        for (const auto& base : current)
            for (const auto& bp : block_perms) {
                Perm p = base;
                for (std::size_t i = 0; i < bp.size(); ++i) p[start + i] = bp[i];
                next.push_back(std::move(p));
            }
        current = std::move(next);
    }
    elements_ = std::move(current);
    std::sort(elements_.begin(), elements_.end());

    lengths_.resize(elements_.size());
    for (std::size_t idx = 0; idx < elements_.size(); ++idx) {
        index_[elements_[idx]] = idx;
        std::size_t inv = 0;
        const Perm& p = elements_[idx];
        for (std::size_t i = 0; i < degree_; ++i)
            for (std::size_t j = i + 1; j < degree_; ++j)
                if (p[i] > p[j]) ++inv;
        lengths_[idx] = inv;
    }
    identity_ = index_.at(id);

    Perm w0(degree_);
    for (auto [start, end] : levi_.block_ranges)
        for (std::size_t i = start; i < end; ++i) w0[i] = static_cast<std::uint8_t>(start + end - 1 - i);
    longest_ = index_.at(w0);

    for (auto [start, end] : levi_.block_ranges)
        for (std::size_t i = start; i + 1 < end; ++i) simple_positions_.push_back(i);
    for (std::size_t pos : simple_positions_) {
        Perm s = id;
        std::swap(s[pos], s[pos + 1]);
        simples_.push_back(index_.at(s));
    }
}

std::size_t WeylGroup::index_of(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) raise(ErrorCode::Generic, "permutation is not in the group");
    return it->second;
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
    const Perm& pa = elements_[a];
    const Perm& pb = elements_[b];
    Perm out(degree_);
    for (std::size_t i = 0; i < degree_; ++i) out[i] = pa[pb[i]];
    return index_of(out);
}

std::size_t WeylGroup::inverse(std::size_t a) const {
    const Perm& p = elements_[a];
    Perm out(degree_);
    for (std::size_t i = 0; i < degree_; ++i) out[p[i]] = static_cast<std::uint8_t>(i);
    return index_of(out);
}

bool WeylGroup::is_left_descent(std::size_t simple, std::size_t w) const {
    // l(s_i w) < l(w) iff the value i appears after the value i+1
    std::size_t pos = simple_positions_[simple];
    const Perm& p = elements_[w];
    std::size_t where_i = 0, where_i1 = 0;
    for (std::size_t j = 0; j < degree_; ++j) {
        if (p[j] == pos) where_i = j;
        if (p[j] == pos + 1) where_i1 = j;
    }
    return where_i > where_i1;
}

bool WeylGroup::is_right_descent(std::size_t simple, std::size_t w) const {
    std::size_t pos = simple_positions_[simple];
    const Perm& p = elements_[w];
    return p[pos] > p[pos + 1];
}

bool WeylGroup::bruhat_leq(std::size_t x, std::size_t w) const {
    if (x == w) return true;
    if (lengths_[x] > lengths_[w]) return false;
    const Perm& px = elements_[x];
    const Perm& pw = elements_[w];
    for (auto [start, end] : levi_.block_ranges) {
        std::vector<std::uint8_t> seen_x, seen_w;
        for (std::size_t i = start; i + 1 < end; ++i) {
            seen_x.push_back(px[i]);
            seen_w.push_back(pw[i]);
            std::sort(seen_x.begin(), seen_x.end());
            std::sort(seen_w.begin(), seen_w.end());
            for (std::size_t k = 0; k < seen_x.size(); ++k)
                if (seen_x[k] > seen_w[k]) return false;
        }
    }
    return true;
}

Weight WeylGroup::permute(std::size_t w, const Weight& v) const {
    const Perm& p = elements_[w];
    Weight out(degree_);
    for (std::size_t i = 0; i < degree_; ++i) out[p[i]] = v[i];
    return out;
}

std::size_t WeylGroup::parse_one_line(const std::string& text) const {
    Perm p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        long v = -1;
        try {
            v = std::stol(item);
        } catch (const std::exception&) {
        }
        if (v < 1 || static_cast<std::size_t>(v) > degree_)
            raise(ErrorCode::ParseError, "bad one-line entry '" + item + "'");
        p.push_back(static_cast<std::uint8_t>(v - 1));
    }
    if (p.size() != degree_)
        raise(ErrorCode::ParseError, "one-line notation needs " + std::to_string(degree_) +
                                         " entries");
    auto it = index_.find(p);
    if (it == index_.end())
        raise(ErrorCode::ParseError, "permutation does not preserve the blocks");
    return it->second;
}

std::string WeylGroup::format_one_line(std::size_t idx) const {
    const Perm& p = elements_[idx];
    std::string out;
    for (std::size_t i = 0; i < degree_; ++i) {
        if (i) out += ',';
        out += std::to_string(static_cast<int>(p[i]) + 1);
    }
    return out;
}

Weight dot_action(const RootDatum& rd, const WeylGroup& W, std::size_t w, const Weight& lambda) {
    return W.permute(w, lambda + rd.rho0) - rd.rho0;
}

LeviDominantResult to_levi_dominant(const RootDatum& rd, const WeylGroup& W_levi,
                                    const Weight& nu) {
    LeviDominantResult result;
    Weight shifted = nu + rd.rho0;
    Perm u(W_levi.rank_positions());
    for (auto [start, end] : W_levi.levi().block_ranges) {
        // sort block entries strictly decreasing; a tie is a Levi wall
        std::vector<std::size_t> order(end - start);
        std::iota(order.begin(), order.end(), start);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return shifted[a] > shifted[b];
        });
        for (std::size_t k = 0; k + 1 < order.size(); ++k)
            if (shifted[order[k]] == shifted[order[k + 1]]) {
                result.singular = true;
                return result;
            }
        for (std::size_t k = 0; k < order.size(); ++k)
            u[order[k]] = static_cast<std::uint8_t>(start + k);
    }
    result.u = W_levi.index_of(u);
    result.mu = dot_action(rd, W_levi, result.u, nu);
    return result;
}

AntidominantResult to_antidominant(const RootDatum& rd, const WeylGroup& W, const Weight& lambda) {
    AntidominantResult result;
    Weight shifted = lambda + rd.rho0;
    Perm u(W.rank_positions());
    for (auto [start, end] : W.levi().block_ranges) {
        std::vector<std::size_t> order(end - start);
        std::iota(order.begin(), order.end(), start);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return shifted[a] < shifted[b];
        });
        for (std::size_t k = 0; k + 1 < order.size(); ++k)
            if (shifted[order[k]] == shifted[order[k + 1]]) {
                result.singular = true;
                return result;
            }
        for (std::size_t k = 0; k < order.size(); ++k)
            u[order[k]] = static_cast<std::uint8_t>(start + k);
    }
    std::size_t u_idx = W.index_of(u);
    result.w = W.inverse(u_idx);
    result.lambda0 = dot_action(rd, W, u_idx, lambda);
    return result;
}

} // namespace wsc
