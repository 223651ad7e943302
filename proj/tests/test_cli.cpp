#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string command = std::string(TCBOUNDS_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json run_json(const std::string& args)
{
    const auto r = run("--json " + args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

void check_report_row(const json& row)
{
    REQUIRE(row.is_object());
    CHECK(row.at("space").is_string());
    CHECK(row.at("quantity").is_string());
    CHECK(row.at("n").is_number_integer());
    CHECK(row.at("lower").is_number_integer());
    const auto& upper = row.at("upper");
    CHECK((upper.is_number_integer() || upper == "inf"));
    REQUIRE(row.at("provenance").is_array());
    for (const auto& p : row.at("provenance"))
        CHECK(p.is_string());
}

const json& find_row(const json& rows, const std::string& quantity, int n)
{
    for (const auto& row : rows)
        if (row.at("quantity") == quantity && row.at("n") == n)
            return row;
    FAIL("row not found: " << quantity << "_" << n);
    return rows;
}

}  // namespace

TEST_CASE("catalog")
{
    const auto r = run("catalog");
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);
    const auto j = run_json("catalog");
    REQUIRE(j.size() == 7);
    CHECK(j[6].at("key") == "conf");
    CHECK(j[4].at("coefficients") == "Z/2");
}

TEST_CASE("nil")
{
    auto r = run("nil rp:3 --power 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("nil-index   7") != std::string::npos);
    const auto j = run_json("nil rp:3 --power 2 --mode direct");
    CHECK(j.at("nil_index") == 7);
    CHECK(j.at("cup_length") == 6);
    CHECK(j.at("mode") == "direct");
    CHECK(j.at("witness").size() == 6);
    check_report_row(j);

    CHECK(run_json("nil sphere:5 --power 1").at("nil_index") == 2);

    const auto empty = temp_file("tcb_empty_ring.txt", "coeff Z\ntopdeg 0\n");
    const auto e = run_json("nil " + empty);
    CHECK(e.at("nil_index") == 1);
    CHECK(e.at("witness").empty());

    const auto conf = temp_file("tcb_conf_ring.txt",
                                "coeff Z\ntopdeg 2\ngen a12 1\ngen a13 1\ngen a23 1\n"
                                "rel a12*a23 - a12*a13 - a13*a23\n");
    CHECK(run_json("nil " + conf).at("cup_length") == 2);
    CHECK(run("nil " + conf + " --power 2").code == 3);  // not marked kunneth-safe
}

TEST_CASE("bounds")
{
    const auto s2 = run_json("bounds sphere:2 --n 3");
    for (const auto& row : s2)
        check_report_row(row);
    CHECK(find_row(s2, "tc", 3).at("lower") == 4);
    CHECK(find_row(s2, "tc", 3).at("upper") == 4);
    CHECK(find_row(s2, "TC", 3).at("lower") == 3);
    CHECK(find_row(s2, "TC", 3).at("upper") == 4);
    CHECK(s2.size() == 13);

    const auto conf = run_json("bounds conf:3:4 --n 2");
    CHECK(find_row(conf, "tc", 2).at("lower") == 7);
    CHECK(find_row(conf, "tc", 2).at("upper") == 7);
    const auto cp = run_json("bounds cp:1 --n 2");
    CHECK(find_row(cp, "tc", 2).at("lower") == 3);
    CHECK(find_row(cp, "tc", 2).at("upper") == 3);
}

TEST_CASE("text numbers appear in the JSON")
{
    const auto text = run("bounds torus-sum:2 --n 3").out;
    const auto rows = run_json("bounds torus-sum:2 --n 3");
    const std::regex line(R"((\S+)\s+\[(\d+), (\d+|inf)\])");
    std::size_t i = 0;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), line); it != std::sregex_iterator(); ++it, ++i) {
        REQUIRE(i < rows.size());
        CHECK(std::to_string(rows[i].at("lower").get<int>()) == (*it)[2].str());
        const auto& upper = rows[i].at("upper");
        CHECK((upper.is_string() ? upper.get<std::string>() : std::to_string(upper.get<int>())) == (*it)[3].str());
    }
    CHECK(i == rows.size());
}

TEST_CASE("table")
{
    const auto rows = run_json("table");
    CHECK(rows.size() == 46 * 4);
    for (const auto& row : rows) {
        check_report_row(row);
        CHECK(row.at("status") == "ok");
        CHECK(row.at("lower") == row.at("expected"));
    }
    const auto first = run_json("table --n-max 1 --grid sphere:1..2,rp:3");
    REQUIRE(first.size() == 3);
    CHECK(first[0].at("lower") == 2);
    CHECK(first[2].at("lower") == 4);
    for (const auto& row : first)
        CHECK(row.at("n") == 1);

    const auto empty = run("table --grid \"\"");
    CHECK(empty.code == 0);
    CHECK(empty.out.empty());
}

TEST_CASE("output is deterministic")
{
    const auto a = run("table --threads 1");
    const auto b = run("table --threads 3");
    const auto c = run("table");
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(run("--json nil conf:2:4 --power 2 --mode direct --threads 2").out ==
          run("--json nil conf:2:4 --power 2 --mode direct --threads 1").out);
    CHECK(run("check-paths --suite reparam --seed 9").out == run("check-paths --suite reparam --seed 9").out);
}

TEST_CASE("check-paths")
{
    auto r = run("check-paths --suite reparam");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    const auto j = run_json("check-paths --suite section --seed 5");
    CHECK(j.at("passed") == true);
    CHECK(j.at("seed") == 5);
    CHECK(j.at("checks").size() == 6);
    CHECK(run("check-paths --suite lift").code == 0);
}

TEST_CASE("ring show")
{
    const auto r = run("ring show conf:2:3");
    CHECK(r.code == 0);
    CHECK(r.out.find("gen a12 1") != std::string::npos);
    CHECK(r.out.find("kunneth-safe") != std::string::npos);
    const auto file = temp_file("tcb_shown_ring.txt", r.out);
    CHECK(run("ring show " + file).out == r.out);
    const auto j = run_json("ring show rp:2");
    CHECK(j.at("coefficients") == "Z/2");
    CHECK(j.at("relations")[0] == "g^3");
}

TEST_CASE("exit codes")
{
    CHECK(run("nil klein:2").code == 2);
    CHECK(run("nil sphere:x").code == 2);
    CHECK(run("table --grid sphere:4..1").code == 2);
    CHECK(run("--no-such-flag catalog").code == 2);
    CHECK(run("").code == 2);
    const auto bad = temp_file("tcb_bad_ring.txt", "coeff Z\ntopdeg 2\ngen x 1\nrel x*y\n");
    CHECK(run("nil " + bad).code == 2);

    CHECK(run("nil sphere:0").code == 3);
    CHECK(run("nil sphere:2 --power 0").code == 3);
    CHECK(run("nil sphere:2 --mode quick").code == 3);
    CHECK(run("bounds sphere:2 --n 0").code == 3);
    CHECK(run("table --n-max 0").code == 3);
    CHECK(run("check-paths --suite nope").code == 3);
    const auto composite = temp_file("tcb_composite_ring.txt", "coeff Zmod 4\ntopdeg 1\n");
    CHECK(run("nil " + composite).code == 3);

    CHECK(run("catalog").code == 0);
    CHECK(run("--help").code == 0);
}
