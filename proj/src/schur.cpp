#include "sf2/schur.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace sf2 {

SchurExpr SchurExpr::single(Partition lam, std::uint32_t max_degree) {
    if (lam.size() > max_degree)
        throw DegreeError("partition size exceeds truncation degree");
    SchurExpr e(max_degree);
    e.terms_.push_back(std::move(lam));
    return e;
}

std::uint32_t SchurExpr::top_size() const {
    std::uint32_t m = 0;
    for (const Partition& lam : terms_) m = std::max(m, lam.size());
    return m;
}

SchurExpr SchurExpr::operator+(const SchurExpr& o) const {
    if (max_degree_ != o.max_degree_)
        throw std::invalid_argument("truncation degree mismatch in +");
    SchurExpr out(max_degree_);
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size())
            out.terms_.push_back(terms_[i++]);
        else if (i == terms_.size())
            out.terms_.push_back(o.terms_[j++]);
        else if (terms_[i] == o.terms_[j]) {
            ++i;
            ++j;
        } else if (partition_precedes(terms_[i], o.terms_[j]))
            out.terms_.push_back(terms_[i++]);
        else
            out.terms_.push_back(o.terms_[j++]);
    }
    return out;
}

std::string SchurExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) out += " + ";
        out += "s" + terms_[i].to_string();
    }
    return out;
}

SchurExpr parse_schur(std::string_view text, std::uint32_t max_degree) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    skip_ws();
    if (pos < text.size() && text[pos] == '0') {
        ++pos;
        skip_ws();
        if (pos != text.size()) throw ParseError(pos, "unexpected input after '0'");
        return SchurExpr(max_degree);
    }
    SchurExpr out(max_degree);
    for (;;) {
        skip_ws();
        if (pos >= text.size() || text[pos] != 's')
            throw ParseError(pos, "expected 's[' term");
        ++pos;
        std::size_t start = pos;
        if (pos >= text.size() || text[pos] != '[') throw ParseError(pos, "expected '['");
        while (pos < text.size() && text[pos] != ']') ++pos;
        if (pos >= text.size()) throw ParseError(pos, "unterminated partition");
        ++pos;
        Partition lam;
        try {
            lam = Partition::parse(text.substr(start, pos - start));
        } catch (const std::invalid_argument& e) {
            throw ParseError(start, e.what());
        }
        if (lam.size() > max_degree)
            throw DegreeError("partition size " + std::to_string(lam.size()) +
                              " exceeds truncation degree " + std::to_string(max_degree));
        out += SchurExpr::single(std::move(lam), max_degree);
        skip_ws();
        if (pos < text.size() && text[pos] == '+') {
            ++pos;
            continue;
        }
        break;
    }
    skip_ws();
    if (pos != text.size()) throw ParseError(pos, "unexpected trailing input");
    return out;
}

SchurExpr omega_on_schur(const SchurExpr& e) {
    SchurExpr out(e.max_degree());
    for (const Partition& lam : e.terms())
        out += SchurExpr::single(lam.conjugate(), e.max_degree());
    return out;
}

SchurExpr mn_multiply(std::uint32_t k, const SchurExpr& e) {
    if (k == 0) throw std::invalid_argument("power sum index must be positive");
    if (k + e.top_size() > e.max_degree())
        throw DegreeError("Murnaghan-Nakayama product exceeds truncation degree");
    SchurExpr out(e.max_degree());
    for (const Partition& lam : e.terms())
        for (Partition& mu : border_strip_additions(lam, k))
            out += SchurExpr::single(std::move(mu), e.max_degree());
    return out;
}

std::vector<Partition> reduce_mod_I(const std::vector<Partition>& lams) {
    std::vector<Partition> reps;
    reps.reserve(lams.size());
    for (const Partition& lam : lams) {
        Partition conj = lam.conjugate();
        reps.push_back(partition_precedes(lam, conj) ? lam : std::move(conj));
    }
    std::sort(reps.begin(), reps.end(), partition_precedes);
    std::vector<Partition> out;
    for (std::size_t i = 0; i < reps.size();) {
        std::size_t j = i;
        while (j < reps.size() && reps[j] == reps[i]) ++j;
        if ((j - i) & 1) out.push_back(reps[i]);
        i = j;
    }
    return out;
}

bool sq_claim_holds(std::uint32_t j) {
    std::vector<Partition> product = border_strip_additions(square_partition(j), 2 * j + 1);
    std::vector<Partition> lhs = reduce_mod_I(product);
    std::vector<Partition> rhs = reduce_mod_I({square_partition(j + 1)});
    return lhs == rhs;
}

Poly jacobi_trudi_in_w(const Partition& lam, std::uint32_t max_degree) {
    const std::uint32_t n = lam.length();
    if (n == 0) return Poly::one(max_degree);
    if (lam.size() > max_degree)
        throw DegreeError("partition size exceeds truncation degree");
    // Entry (i, j) of the Jacobi-Trudi matrix is w_{lam_i - i + j} (w_0 = 1,
    // negative index = 0). Laplace expansion along columns, memoized on the
    // surviving row set: det(rows S, first |S| columns).
    std::vector<std::vector<Poly>> entry(n, std::vector<Poly>(n, Poly::zero(max_degree)));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            std::int64_t idx = std::int64_t{lam.parts()[i]} - (i + 1) + (j + 1);
            if (idx == 0)
                entry[i][j] = Poly::one(max_degree);
            else if (idx > 0 && idx <= max_degree)
                entry[i][j] = Poly::w(static_cast<std::uint32_t>(idx), max_degree);
        }
    std::unordered_map<std::uint32_t, Poly> memo;
    memo.emplace(0u, Poly::one(max_degree));
    auto det = [&](auto&& self, std::uint32_t rowset) -> const Poly& {
        auto it = memo.find(rowset);
        if (it != memo.end()) return it->second;
        const std::uint32_t col = static_cast<std::uint32_t>(std::popcount(rowset)) - 1;
        Poly acc(max_degree);
        for (std::uint32_t i = 0; i < n; ++i) {
            if (!((rowset >> i) & 1u)) continue;
            if (!entry[i][col].is_zero())
                acc += entry[i][col] * self(self, rowset & ~(1u << i));
        }
        return memo.emplace(rowset, std::move(acc)).first->second;
    };
    return det(det, (n >= 32 ? ~0u : (1u << n) - 1u));
}

SchurTable::SchurTable(std::uint32_t max_degree) : n_(max_degree) {
    by_degree_.reserve(n_ + 1);
    for (std::uint32_t d = 0; d <= n_; ++d) {
        DegreeData data{enumerate_partitions(d), {}, MonomialBasis(d, GenSet::AllW), {}};
        const std::size_t dim = data.basis.dim();
        data.schur_w.reserve(dim);
        gf2::BitMatrix aug(dim, 2 * dim);
        for (std::size_t j = 0; j < dim; ++j) {
            data.schur_w.push_back(jacobi_trudi_in_w(data.partitions[j], n_));
            gf2::BitVec col = data.basis.to_vec(data.schur_w.back());
            for (std::size_t i = 0; i < dim; ++i)
                if (col.get(i)) aug.set(i, j);
        }
        for (std::size_t i = 0; i < dim; ++i) aug.set(i, dim + i);
        auto pivots = aug.rref();
        bool invertible = pivots.size() >= dim;
        for (std::size_t i = 0; invertible && i < dim; ++i) invertible = pivots[i] == i;
        if (!invertible)
            throw std::logic_error("Schur polynomials are not a basis at degree " +
                                   std::to_string(d));
        gf2::BitMatrix inv(dim, dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c)
                if (aug.get(r, dim + c)) inv.set(r, c);
        data.inverse = std::move(inv);
        by_degree_.push_back(std::move(data));
    }
}

const SchurTable::DegreeData& SchurTable::at(std::uint32_t d) const {
    if (d > n_) throw std::out_of_range("degree above truncation");
    return by_degree_[d];
}

const std::vector<Partition>& SchurTable::partitions_of(std::uint32_t d) const {
    return at(d).partitions;
}

const Poly& SchurTable::schur_in_w(const Partition& lam) const {
    const DegreeData& data = at(lam.size());
    auto it = std::lower_bound(data.partitions.begin(), data.partitions.end(), lam,
                               partition_precedes);
    if (it == data.partitions.end() || !(*it == lam))
        throw std::invalid_argument("partition not found");  // unreachable
    return data.schur_w[static_cast<std::size_t>(it - data.partitions.begin())];
}

SchurExpr SchurTable::to_schur(const Poly& x) const {
    if (x.max_degree() != n_)
        throw std::invalid_argument("truncation degree mismatch in to_schur");
    SchurExpr out(n_);
    for (std::uint32_t d = 0; d <= n_; ++d) {
        Poly comp = x.graded_component(d);
        if (comp.is_zero()) continue;
        const DegreeData& data = at(d);
        gf2::BitVec v = data.basis.to_vec(comp);
        for (std::size_t i = 0; i < data.partitions.size(); ++i)
            if (gf2::row_and_parity(data.inverse.row(i), v.words(), v.word_count()))
                out += SchurExpr::single(data.partitions[i], n_);
    }
    return out;
}

Poly SchurTable::from_schur(const SchurExpr& e) const {
    if (e.max_degree() != n_)
        throw std::invalid_argument("truncation degree mismatch in from_schur");
    Poly out(n_);
    for (const Partition& lam : e.terms()) out += schur_in_w(lam);
    return out;
}

std::vector<gf2::BitVec> SchurTable::s_basis_of_S(std::uint32_t d) const {
    const DegreeData& data = at(d);
    auto index_of = [&](const Partition& lam) {
        auto it = std::lower_bound(data.partitions.begin(), data.partitions.end(), lam,
                                   partition_precedes);
        return static_cast<std::size_t>(it - data.partitions.begin());
    };
    std::vector<gf2::BitVec> out;
    for (std::size_t i = 0; i < data.partitions.size(); ++i) {
        const Partition& lam = data.partitions[i];
        Partition conj = lam.conjugate();
        if (lam == conj) {
            gf2::BitVec v(data.partitions.size());
            v.set(i);
            out.push_back(std::move(v));
        } else if (partition_precedes(lam, conj)) {  // one vector per pair
            gf2::BitVec v(data.partitions.size());
            v.set(i);
            v.set(index_of(conj));
            out.push_back(std::move(v));
        }
    }
    return out;
}

}  // namespace sf2
