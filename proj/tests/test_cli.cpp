#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("PRIMEAP_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "PRIMEAP_CLI must point at the CLI binary");
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("count command emits one row") {
    const auto r = run_cli("count --x 1000 --q 3 --a 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("pi") != std::string::npos);
    CHECK(r.out.find("\n1000,3,1,prime-power,80,") != std::string::npos);
}

TEST_CASE("count rejects non-coprime class with exit 2") {
    CHECK(run_cli("count --x 1000 --q 4 --a 2").exit_code == 2);
}

TEST_CASE("count handles the smallest point") {
    const auto r = run_cli("count --x 2 --q 1 --a 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\n2,1,0,prime-power,1,") != std::string::npos);
}

TEST_CASE("bounds sweep passes and exits 0") {
    const auto r = run_cli("bounds --x-min 1000 --x-max 50000 --x-samples 6 --q-max 5 --claims psi");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("summary_claim") != std::string::npos);
    CHECK(r.out.find("false") == std::string::npos);
}

TEST_CASE("bounds exponent claim fails at v = 2 with exit 1") {
    const auto r = run_cli("bounds --claims exponent --v-min 2 --v-max 10");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("exponent_condition,2,") != std::string::npos);
}

TEST_CASE("bounds below the theorem threshold exits 2") {
    CHECK(run_cli("bounds --x-min 10 --x-max 100 --claims psi").exit_code == 2);
}

TEST_CASE("scan emits records plus summary") {
    const auto r = run_cli("scan --n-min 4 --n-max 4 --power 2 --q 4 --a 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("4,2,4,1,16,25,1,17,17,false") != std::string::npos);
    CHECK(r.out.find("summary_q") != std::string::npos);
}

TEST_CASE("scan rejects power 1 with exit 2") {
    CHECK(run_cli("scan --n-min 4 --n-max 4 --power 1").exit_code == 2);
}

TEST_CASE("gaps at limit 100") {
    const auto r = run_cli("gaps --limit 100");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("89,97,8,") != std::string::npos);
}

TEST_CASE("json and csv runs carry identical values") {
    const auto csv = run_cli("count --x 5000 --q 5 --a 2 --format csv");
    const auto json = run_cli("count --x 5000 --q 5 --a 2 --format json");
    CHECK(csv.exit_code == 0);
    CHECK(json.exit_code == 0);
    // Same digits must appear in both encodings.
    const auto psi_pos = csv.out.rfind('\n', csv.out.size() - 2);
    const std::string data_line = csv.out.substr(psi_pos + 1);
    std::size_t start = 0;
    int checked = 0;
    for (std::size_t i = 0; i <= data_line.size(); ++i) {
        if (i == data_line.size() || data_line[i] == ',' || data_line[i] == '\n') {
            const std::string field = data_line.substr(start, i - start);
            if (!field.empty()) {
                CHECK(json.out.find(field) != std::string::npos);
                ++checked;
            }
            start = i + 1;
        }
    }
    CHECK(checked >= 8);
}

TEST_CASE("identical runs are byte-identical") {
    const auto a = run_cli("bounds --x-min 1000 --x-max 10000 --x-samples 4 --q-max 3");
    const auto b = run_cli("bounds --x-min 1000 --x-max 10000 --x-samples 4 --q-max 3");
    CHECK(a.out == b.out);
}
