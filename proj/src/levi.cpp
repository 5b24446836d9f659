#include "wsc/levi.hpp"

#include <numeric>
#include <sstream>

namespace wsc {

namespace {

std::vector<std::size_t> parse_composition(const std::string& text) {
    std::vector<std::size_t> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, '+')) {
        long v = -1;
        try {
            v = std::stol(item);
        } catch (const std::exception&) {
        }
        if (v <= 0) raise(ErrorCode::ParseError, "bad block size '" + item + "'");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

} // namespace

LeviDatum build_levi(const RootDatum& rd, const std::vector<std::size_t>& even_blocks,
                     const std::vector<std::size_t>& odd_blocks) {
    if (rd.family == Family::OSP) {
        // Only the full even part so(2) + sp(2n) is supported as a Levi for
        // osp; proper Levis would need type C Weyl machinery.
        if (!(even_blocks.size() == 1 && even_blocks[0] == 1 && odd_blocks.size() == 1 &&
              odd_blocks[0] == rd.n))
            raise(ErrorCode::UnsupportedFamily,
                  "proper Levi subalgebras are not supported for osp(2|2n)");
        LeviDatum levi;
        levi.even_blocks = even_blocks;
        levi.odd_blocks = odd_blocks;
        levi.block_of.assign(rd.rank(), 0);
        for (std::size_t i = 1; i < rd.rank(); ++i) levi.block_of[i] = 1;
        levi.block_ranges = {{0, 1}, {1, rd.rank()}};
        CoordVector h_eps(rd.rank());
        h_eps[0] = 1;
        levi.center_basis = {h_eps};
        levi.positive_roots = rd.even_positive_roots;
        levi.rho_levi = rd.rho0;
        levi.full = true;
        return levi;
    }

    auto total = [](const std::vector<std::size_t>& v) {
        return std::accumulate(v.begin(), v.end(), std::size_t{0});
    };
    if (total(even_blocks) != rd.m || total(odd_blocks) != rd.n)
        raise(ErrorCode::ParseError, "Levi blocks do not sum to the algebra ranks");

    LeviDatum levi;
    levi.even_blocks = even_blocks;
    levi.odd_blocks = odd_blocks;
    levi.block_of.assign(rd.rank(), 0);
    std::size_t pos = 0, blk = 0;
    auto add_blocks = [&](const std::vector<std::size_t>& blocks) {
        for (std::size_t size : blocks) {
            levi.block_ranges.push_back({pos, pos + size});
            for (std::size_t i = 0; i < size; ++i) levi.block_of[pos + i] = blk;
            pos += size;
            ++blk;
        }
    };
    add_blocks(even_blocks);
    add_blocks(odd_blocks);

    for (auto [start, end] : levi.block_ranges) {
        CoordVector indicator(rd.rank());
        for (std::size_t i = start; i < end; ++i) indicator[i] = 1;
        levi.center_basis.push_back(std::move(indicator));
    }

    for (auto [start, end] : levi.block_ranges)
        for (std::size_t i = start; i < end; ++i)
            for (std::size_t j = i + 1; j < end; ++j) {
                Weight root(rd.rank());
                root[i] = 1;
                root[j] = -1;
                levi.positive_roots.push_back(std::move(root));
            }

    levi.rho_levi = Weight(rd.rank());
    for (const auto& root : levi.positive_roots) levi.rho_levi += rat(1, 2) * root;
    levi.full = even_blocks.size() <= 1 && odd_blocks.size() <= 1;
    return levi;
}

LeviDatum full_levi(const RootDatum& rd) {
    if (rd.family == Family::OSP) return build_levi(rd, {1}, {rd.n});
    std::vector<std::size_t> eb, ob;
    if (rd.m > 0) eb.push_back(rd.m);
    if (rd.n > 0) ob.push_back(rd.n);
    return build_levi(rd, eb, ob);
}

LeviDatum parse_levi(const RootDatum& rd, const std::string& text) {
    if (text.empty()) return full_levi(rd);
    if (rd.family == Family::OSP) {
        if (text == "2|" + std::to_string(2 * rd.n) || text == "1|" + std::to_string(rd.n))
            return full_levi(rd);
        raise(ErrorCode::UnsupportedFamily,
              "proper Levi subalgebras are not supported for osp(2|2n)");
    }
    std::string left = text, right;
    auto bar = text.find('|');
    if (bar != std::string::npos) {
        left = text.substr(0, bar);
        right = text.substr(bar + 1);
    }
    return build_levi(rd, parse_composition(left), parse_composition(right));
}

std::string format_levi(const LeviDatum& levi) {
    std::string out;
    for (std::size_t i = 0; i < levi.even_blocks.size(); ++i) {
        if (i) out += '+';
        out += std::to_string(levi.even_blocks[i]);
    }
    out += '|';
    for (std::size_t i = 0; i < levi.odd_blocks.size(); ++i) {
        if (i) out += '+';
        out += std::to_string(levi.odd_blocks[i]);
    }
    return out;
}

bool is_levi_dominant(const RootDatum& rd, const LeviDatum& levi, const Weight& mu) {
    for (const auto& root : levi.positive_roots)
        if (rd.even_form(mu, root) < 0) return false;
    return true;
}

std::int64_t weyl_dimension(const RootDatum& rd, const LeviDatum& levi, const Weight& mu) {
    if (!mu.is_integral())
        raise(ErrorCode::NotIntegral, "Weyl dimension needs an integral weight");
    if (!is_levi_dominant(rd, levi, mu))
        raise(ErrorCode::NotDominant, "weight is not Levi-dominant");
    Rational dim = 1;
    Weight shifted = mu + levi.rho_levi;
    for (const auto& root : levi.positive_roots)
        dim *= rd.even_form(shifted, root) / rd.even_form(levi.rho_levi, root);
    return to_int64(dim);
}

} // namespace wsc
