#include "gnorm/common.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace gnorm {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::DegenerateParameters: return "DegenerateParameters";
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::EvenOrder: return "EvenOrder";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::WrongResidueClass: return "WrongResidueClass";
    case ErrorKind::NotBalanced: return "NotBalanced";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::OutOfScopeParameters: return "OutOfScopeParameters";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string &what) { throw Error(kind, what); }

unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("GNORM_THREADS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0)
            return std::min<unsigned>(static_cast<unsigned>(v), hw);
    }
    return hw;
}

namespace {
thread_local bool in_worker = false;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body) {
    if (n == 0)
        return;
    unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
    // nested calls stay on the calling worker
    if (workers <= 1 || in_worker) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto run = [&] {
        bool outer = in_worker;
        in_worker = true;
        struct Reset {
            bool v;
            ~Reset() { in_worker = v; }
        } reset{outer};
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n || failed.load())
                return;
            try {
                body(i);
            } catch (...) {
                if (!failed.exchange(true))
                    error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w)
        pool.emplace_back(run);
    run();
    for (auto &t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

std::uint64_t binomial_u64(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

} // namespace gnorm
