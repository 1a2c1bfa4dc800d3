#include "xorsat/serialize.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace xorsat {

std::string instance_to_json(const XorSatInstance& inst) {
    nlohmann::ordered_json j;
    j["m"] = inst.m();
    j["n"] = inst.n();
    j["k"] = inst.k;
    j["d"] = inst.d;
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < inst.m(); ++r) {
        auto row = nlohmann::ordered_json::array();
        const BitVec& b = inst.B.row(r);
        for (std::size_t c = b.next_set(0); c < inst.n(); c = b.next_set(c + 1)) row.push_back(c);
        rows.push_back(std::move(row));
    }
    j["B_rows"] = std::move(rows);
    j["v"] = inst.v.to_string();
    j["seed"] = inst.seed;
    j["ensemble"] = inst.ensemble;
    return j.dump();
}

XorSatInstance instance_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrCode::parse, std::string("instance_from_json: ") + e.what());
    }
    try {
        XorSatInstance inst;
        const std::size_t m = j.at("m").get<std::size_t>();
        const std::size_t n = j.at("n").get<std::size_t>();
        inst.B = BitMatrix(m, n);
        const auto& rows = j.at("B_rows");
        if (rows.size() != m) fail(ErrCode::parse, "instance_from_json: B_rows size mismatch");
        for (std::size_t r = 0; r < m; ++r)
            for (const auto& c : rows[r]) {
                const std::size_t col = c.get<std::size_t>();
                if (col >= n) fail(ErrCode::parse, "instance_from_json: column index out of range");
                inst.B.set(r, col, true);
            }
        inst.v = BitVec::from_string(j.at("v").get<std::string>());
        if (inst.v.len() != m) fail(ErrCode::parse, "instance_from_json: parity length mismatch");
        inst.k = j.at("k").get<int>();
        inst.d = j.at("d").get<int>();
        inst.seed = j.at("seed").get<std::uint64_t>();
        inst.ensemble = j.at("ensemble").get<std::string>();
        return inst;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrCode::parse, std::string("instance_from_json: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrCode::parse, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrCode::parse, "cannot write " + path);
    out << content;
}

} // namespace xorsat
