// Times the serial reference kernels against the OpenMP ones on the dense
// matrix sizes the verifier actually sees (n = 2^nb).

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "CLI11.hpp"
#include "qgc/kernels.hpp"

using qgc::CMat;
using qgc::RMat;
using qgc::cplx;

namespace {

std::mt19937_64 rng{12345};

CMat random_cmat(int n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    CMat m(n);
    for (cplx& z : m.a) z = cplx{dist(rng), dist(rng)};
    return m;
}

RMat random_symmetric(int n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    RMat m(n);
    for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c) m(r, c) = m(c, r) = dist(rng);
    return m;
}

template <typename F>
double time_ms(int reps, F&& body) {
    body();  // warm the caches and the OpenMP runtime before timing
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) body();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

void report(const char* name, int n, double serial_ms, double par_ms) {
    std::printf("%-18s %6d %12.3f %12.3f %9.2fx\n", name, n, serial_ms, par_ms,
                par_ms > 0 ? serial_ms / par_ms : 0.0);
}

void bench_size(int n, int reps) {
    namespace serial = qgc::kern::serial;
    namespace par = qgc::kern::par;

    CMat a = random_cmat(n), b = random_cmat(n), out(n);
    report("matmul", n, time_ms(reps, [&] { serial::matmul(a, b, out); }),
           time_ms(reps, [&] { par::matmul(a, b, out); }));

    qgc::kern::BlockGate gate;
    gate.target = 0;
    gate.m00 = gate.m01 = gate.m10 = cplx{0.5, 0.5};
    gate.m11 = cplx{0.5, -0.5};
    report("apply_block_gate", n,
           time_ms(reps, [&] { serial::apply_block_gate(a, gate); }),
           time_ms(reps, [&] { par::apply_block_gate(a, gate); }));

    report("apply_phase", n, time_ms(reps, [&] { serial::apply_phase(a, 1, 1, 0.1); }),
           time_ms(reps, [&] { par::apply_phase(a, 1, 1, 0.1); }));

    report("frobenius", n,
           time_ms(reps, [&] { (void)serial::frobenius_distance(a, b); }),
           time_ms(reps, [&] { (void)par::frobenius_distance(a, b); }));

    RMat sym = random_symmetric(n);
    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) values[i] = sym(i, i);
    report("evolution", n,
           time_ms(reps, [&] { serial::evolution_from_eigen(sym, values, out); }),
           time_ms(reps, [&] { par::evolution_from_eigen(sym, values, out); }));

    RMat js = sym, jv = RMat::identity(n);
    report("jacobi_rotate", n,
           time_ms(reps, [&] {
               for (int q = 1; q < n; ++q) serial::jacobi_rotate(js, jv, 0, q, 0.8, 0.6);
           }),
           time_ms(reps, [&] {
               for (int q = 1; q < n; ++q) par::jacobi_rotate(js, jv, 0, q, 0.8, 0.6);
           }));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Benchmark of the serial reference kernels vs the OpenMP kernels"};
    std::vector<int> sizes{256, 512, 1024};
    int reps = 3;
    app.add_option("--size", sizes, "Matrix sizes to time")->capture_default_str();
    app.add_option("--reps", reps, "Repetitions per measurement")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    std::printf("%-18s %6s %12s %12s %9s\n", "kernel", "n", "serial ms", "openmp ms",
                "speedup");
    for (int n : sizes) bench_size(n, reps);
    return 0;
}
