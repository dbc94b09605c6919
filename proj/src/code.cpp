#include "hullcensus/code.hpp"

#include <cstdint>
#include <stdexcept>

namespace hullcensus {

Code Code::span(const Matrix& generators) {
    RrefResult red = rref(generators);
    Matrix gen(generators.field(), red.rank, generators.cols());
    for (int r = 0; r < red.rank; ++r)
        for (int c = 0; c < generators.cols(); ++c)
            gen.set(r, c, red.matrix.at(r, c));
    return Code(std::move(gen));
}

Code Code::full(const Field& field, int n) {
    Matrix id(field, n, n);
    for (int i = 0; i < n; ++i)
        id.set(i, i, 1);
    return Code(std::move(id));
}

Code dual_code(const Code& c) {
    return Code::span(null_space(c.generator()));
}

int hull_dimension(const Code& c) {
    if (c.k() == 0)
        return 0;
    return c.k() - rank(gram(c.generator()));
}

int hull_dimension_by_intersection(const Code& c) {
    if (c.k() == 0)
        return 0;
    return row_space_intersection_dim(c.generator(), null_space(c.generator()));
}

namespace {

int weight_of_codeword(const std::vector<Field::Elem>& w) {
    int wt = 0;
    for (Field::Elem v : w)
        wt += v != 0;
    return wt;
}

// DFS over messages, accumulating the partial codeword one generator row at
// a time; visits every nonzero message exactly once.
void sweep(const Matrix& g, int depth, bool nonzero, std::vector<Field::Elem>& acc, int& best) {
    const Field& f = g.field();
    if (depth == g.rows()) {
        if (nonzero) {
            int wt = weight_of_codeword(acc);
            if (wt < best)
                best = wt;
        }
        return;
    }
    sweep(g, depth + 1, nonzero, acc, best);
    std::vector<Field::Elem> saved = acc;
    for (int coef = 1; coef < f.q(); ++coef) {
        acc = saved;
        for (int j = 0; j < g.cols(); ++j)
            acc[static_cast<size_t>(j)] =
                f.add(acc[static_cast<size_t>(j)],
                      f.mul(static_cast<Field::Elem>(coef), g.at(depth, j)));
        sweep(g, depth + 1, true, acc, best);
    }
    acc = saved;
}

int min_distance_binary(const Matrix& g) {
    // Gray-code walk over the 2^k - 1 nonzero messages, one row XOR per step.
    const int k = g.rows();
    const int n = g.cols();
    std::vector<std::uint64_t> rows(static_cast<size_t>(k), 0);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < n; ++c)
            if (g.at(r, c))
                rows[static_cast<size_t>(r)] |= std::uint64_t{1} << c;
    std::uint64_t word = 0;
    int best = n + 1;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        int flip = __builtin_ctzll(i);
        word ^= rows[static_cast<size_t>(flip)];
        int wt = __builtin_popcountll(word);
        if (wt < best)
            best = wt;
    }
    return best;
}

} // namespace

int min_distance(const Code& c) {
    if (c.k() == 0)
        throw std::domain_error("zero code has no nonzero codeword");
    double work = 1;
    for (int i = 0; i < c.k(); ++i)
        work *= c.field().q();
    if (work > double(1 << 24))
        throw std::domain_error("codeword sweep q^k exceeds 2^24");
    const Matrix& g = c.generator();
    if (c.field().q() == 2 && c.n() <= 64)
        return min_distance_binary(g);
    std::vector<Field::Elem> acc(static_cast<size_t>(c.n()), 0);
    int best = c.n() + 1;
    sweep(g, 0, false, acc, best);
    return best;
}

int dual_distance(const Code& c) {
    return min_distance(dual_code(c));
}

bool has_zero_column(const Matrix& generator) {
    for (int c = 0; c < generator.cols(); ++c) {
        bool all_zero = true;
        for (int r = 0; r < generator.rows(); ++r)
            if (generator.at(r, c) != 0) {
                all_zero = false;
                break;
            }
        if (all_zero)
            return true;
    }
    return false;
}

bool is_even(const Code& c) {
    if (c.field().q() != 2)
        throw std::invalid_argument("evenness is defined for binary codes only");
    // Weight parity is additive over GF(2), so checking generator rows suffices.
    for (int r = 0; r < c.k(); ++r) {
        int wt = 0;
        for (int j = 0; j < c.n(); ++j)
            wt += c.generator().at(r, j) != 0;
        if (wt % 2 != 0)
            return false;
    }
    return true;
}

bool is_self_orthogonal(const Code& c) {
    return hull_dimension(c) == c.k();
}

bool is_lcd(const Code& c) {
    return hull_dimension(c) == 0;
}

} // namespace hullcensus
