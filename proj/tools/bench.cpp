// Timing comparison between the parallel row reduction and its serial
// reference, plus a shift-walk timing on a growing orbit. Exact arithmetic
// makes entry growth, not flop count, the dominant cost, so the matrices are
// seeded with small mixed-sign entries that force real fraction churn.

#include <gkmod/analysis.hpp>
#include <gkmod/constructions.hpp>
#include <gkmod/matrix.hpp>
#include <gkmod/shift.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <random>

using namespace gkmod;

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng) {
    Matrix a(rows, cols);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a.at(r, c) = entry(rng);
    return a;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"row-reduction and shift-walk timings"};
    int repeats = 3;
    int max_size = 192;
    int walk_steps = 6;
    app.add_option("--repeats", repeats, "timed repetitions per size")->check(CLI::PositiveNumber);
    app.add_option("--max-size", max_size, "largest square matrix side")
        ->check(CLI::PositiveNumber);
    app.add_option("--walk-steps", walk_steps, "forward shifts in the orbit walk")
        ->check(CLI::NonNegativeNumber);
    CLI11_PARSE(app, argc, argv);

    std::mt19937 rng(1234);
    std::printf("%8s %12s %12s %9s\n", "size", "serial s", "parallel s", "speedup");
    for (int size = 48; size <= max_size; size += 48) {
        const std::size_t s = static_cast<std::size_t>(size);
        double serial = 0, parallel = 0;
        for (int it = 0; it < repeats; ++it) {
            const Matrix a = random_matrix(s, s + 16, rng);
            auto t0 = std::chrono::steady_clock::now();
            const Echelon es = rref_serial(a);
            serial += seconds_since(t0);
            t0 = std::chrono::steady_clock::now();
            const Echelon ep = rref(a);
            parallel += seconds_since(t0);
            if (es.mat != ep.mat || es.pivots != ep.pivots) {
                std::fprintf(stderr, "size %d: serial and parallel reductions disagree\n", size);
                return 1;
            }
        }
        std::printf("%8d %12.4f %12.4f %8.2fx\n", size, serial / repeats, parallel / repeats,
                    parallel > 0 ? serial / parallel : 0.0);
    }

    const Orientation o{4, true};
    Representation m = seed_module(o, 3, 3);
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < walk_steps; ++i) m = sigma(m);
    const double walk = seconds_since(t0);
    std::printf("\nshift walk: %d steps to total dimension %lld in %.4f s\n", walk_steps,
                m.total_dim(), walk);
    return 0;
}
