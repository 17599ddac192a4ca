#include <cmath>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "msii/circular.hpp"
#include "msii/cli.hpp"
#include "msii/core.hpp"
#include "msii/noncircular.hpp"
#include "msii/oracle.hpp"
#include "text_io.hpp"

namespace msii::cli {
namespace {

template <typename T>
T parse_scalar_token(TokenReader& tok) {
    return parse_number<T>(tok, "scalar");
}

std::size_t parse_count(TokenReader& tok, const char* what) {
    const auto v = parse_number<std::int64_t>(tok, what);
    if (v < 0) throw ParseError(tok.line(), std::string(what) + " must be nonnegative");
    return static_cast<std::size_t>(v);
}

template <typename T>
int solve_impl(std::istream& in, std::ostream& out, std::ostream& err, const SolveOptions& opt) {
    TokenReader tok(in);
    try {
        const std::size_t n = parse_count(tok, "sequence length");
        std::vector<T> a(n);
        T max_abs = 0;
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = parse_scalar_token<T>(tok);
            if constexpr (std::signed_integral<T>) {
                max_abs = std::max(max_abs, a[i] < 0 ? -a[i] : a[i]);
            }
        }
        if constexpr (std::signed_integral<T>) {
            if (!within_overflow_bound(n + 1, max_abs)) {
                err << "error: line " << tok.line() << ": input magnitudes exceed the overflow bound\n";
                return 2;
            }
        }

        NoncircIndex<T> noncirc_idx;
        CircIndex<T> circ_idx;
        if (opt.circular) {
            circ_idx = preprocess_circ(a);
        } else {
            noncirc_idx = preprocess_noncirc(a);
        }

        const std::size_t m = parse_count(tok, "query count");
        for (std::size_t q = 0; q < m; ++q) {
            const T x = parse_scalar_token<T>(tok);
            const std::size_t p = parse_count(tok, "insertion position");
            if (p > n) {
                err << "error: line " << tok.line() << ": position out of range\n";
                return 2;
            }
            if constexpr (std::signed_integral<T>) {
                if (!within_overflow_bound(n + 1, std::max(max_abs, x < 0 ? -x : x))) {
                    err << "error: line " << tok.line()
                        << ": input magnitudes exceed the overflow bound\n";
                    return 2;
                }
            }
            const T answer = opt.circular ? query_circ(circ_idx, x, p) : query_noncirc(noncirc_idx, x, p);
            if (opt.check) {
                const T expected = opt.circular
                                       ? oracle::brute_query_circ(std::span<const T>{a}, x, p)
                                       : oracle::brute_query_noncirc(std::span<const T>{a}, x, p);
                if (answer != expected) {
                    err << "check failed: query " << q << " (x=" << format_scalar(x)
                        << ", p=" << p << "): got " << format_scalar(answer) << ", oracle says "
                        << format_scalar(expected) << "\n";
                    return 1;
                }
            }
            out << format_scalar(answer) << "\n";
        }
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

int run_solve(std::istream& in, std::ostream& out, std::ostream& err, const SolveOptions& opt) {
    if (opt.parse_float) return solve_impl<double>(in, out, err, opt);
    return solve_impl<std::int64_t>(in, out, err, opt);
}

}  // namespace msii::cli
