#include <cstdint>
#include <ostream>
#include <vector>

#include "msii/buffer_cost.hpp"
#include "msii/cli.hpp"
#include "text_io.hpp"

namespace msii::cli {
namespace {

template <typename T>
int colmove_impl(std::istream& in, std::ostream& out, std::ostream& err) {
    TokenReader tok(in);
    try {
        const auto rows = parse_number<std::int64_t>(tok, "row count");
        const auto cols = parse_number<std::int64_t>(tok, "column count");
        if (rows < 1 || cols < 1) {
            throw ParseError(tok.line(), "matrix dimensions must be positive");
        }
        RoundMatrix<T> matrix(static_cast<std::size_t>(rows),
                              std::vector<T>(static_cast<std::size_t>(cols)));
        for (auto& row : matrix) {
            for (auto& cell : row) cell = parse_number<T>(tok, "matrix entry");
        }
        const auto k = parse_number<std::int64_t>(tok, "column index");
        if (k < 0 || k >= cols) {
            err << "error: line " << tok.line() << ": column index out of range\n";
            return 2;
        }
        for (std::size_t i = 0; i < matrix.size(); ++i) {
            T sum = 0;
            for (const T v : matrix[i]) sum += v;
            if (sum != 0) {
                err << "warning: row " << i << " sums to " << format_scalar(sum)
                    << "; the repeating-rounds cost model assumes zero row sums\n";
            }
        }
        const auto move = best_column_move(matrix, static_cast<std::size_t>(k));
        out << move.position << " " << format_scalar(move.cost) << "\n";
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int run_colmove(std::istream& in, std::ostream& out, std::ostream& err,
                const ColmoveOptions& opt) {
    if (opt.parse_float) return colmove_impl<double>(in, out, err);
    return colmove_impl<std::int64_t>(in, out, err);
}

}  // namespace msii::cli
