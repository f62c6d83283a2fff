// Compares the parallel rational matrix multiply against the serial
// reference on random matrices and checks exact agreement.
#include <chrono>
#include <iostream>
#include <random>

#include "hsc/matrix.hpp"

using namespace hsc;

static Mat random_mat(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat re(num(rng), den(rng)), im(num(rng), den(rng));
            re.canonicalize();
            im.canonicalize();
            m.at(i, j) = Scalar(re, im);
        }
    return m;
}

template <typename F>
static double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

int main(int argc, char** argv) {
    int size = argc > 1 ? std::atoi(argv[1]) : 192;
    int reps = argc > 2 ? std::atoi(argv[2]) : 3;
    std::mt19937_64 rng(42);
    Mat a = random_mat(size, rng), b = random_mat(size, rng);

    Mat parallel_result(0, 0), serial_result(0, 0);
    double tp = 0, ts = 0;
    for (int r = 0; r < reps; ++r) {
        tp += time_ms([&] { parallel_result = a * b; });
        ts += time_ms([&] { serial_result = mul_serial(a, b); });
    }
    if (!(parallel_result == serial_result)) {
        std::cerr << "MISMATCH between parallel and serial multiply\n";
        return 1;
    }
    std::cout << "size " << size << "x" << size << ", " << reps << " reps\n"
              << "parallel: " << tp / reps << " ms/rep\n"
              << "serial:   " << ts / reps << " ms/rep\n"
              << "speedup:  " << ts / tp << "x\n"
              << "exact agreement: yes\n";
    return 0;
}
