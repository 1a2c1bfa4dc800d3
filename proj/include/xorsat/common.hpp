#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace xorsat {

inline constexpr const char* kVersion = "0.1.0";

enum class ErrCode : int {
    ok = 0,
    invalid_argument = 1,
    domain = 2,
    syndrome_collision = 3,
    unknown_syndrome = 4,
    cap_exceeded = 5,
    parse = 6,
    numeric = 7,
};

class Error : public std::runtime_error {
public:
    Error(ErrCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrCode code() const noexcept { return code_; }

private:
    ErrCode code_;
};

[[noreturn]] inline void fail(ErrCode code, const std::string& what) { throw Error(code, what); }

[[noreturn]] inline void fail_invalid(const std::string& what) { fail(ErrCode::invalid_argument, what); }

// Resource ceilings. XORSAT_CAP_MB lowers (never raises) the defaults; the
// translation from megabytes to per-structure budgets is approximate and
// documented in the README.
struct Caps {
    std::uint64_t decode_table_entries = 10'000'000;     // syndrome->error map entries
    std::uint64_t histogram_pair_products = 100'000'000; // |S1|*|S2| in overlap scans
    std::uint64_t state_bytes = 2ull << 30;              // largest amplitude vector

    static const Caps& get();
};

} // namespace xorsat
