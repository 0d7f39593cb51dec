// Copyright 2026 The relgme Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>

#include "doctest.h"
#include "relgme/errors.hpp"
#include "relgme/state_io.hpp"

using namespace relgme;

TEST_CASE("pure composite state round trip") {
    const CompositeState s = compose(permutation_momentum(antisymmetric_coefficients()), ghz());
    const StateFile parsed = parse_state(format_state(StateFile::from(s)));
    CHECK(parsed.is_composite());
    CHECK_FALSE(parsed.is_mixed());
    CHECK(distance(parsed.as_composite().vector(), s.vector()) == 0.0);

    const auto path = std::filesystem::temp_directory_path() / "relgme_io_roundtrip.json";
    write_state(StateFile::from(s), path);
    CHECK(distance(read_state(path).as_composite().vector(), s.vector()) == 0.0);
    std::filesystem::remove(path);
}

TEST_CASE("ensemble round trip") {
    const MixedState m({{0.5, compose(StateVector::basis(27, 5), ghz())},
                        {0.5, compose(StateVector::basis(27, 11), w_state())}});
    const StateFile parsed = parse_state(format_state(StateFile::from(m)));
    CHECK(parsed.is_mixed());
    CHECK(frobenius_distance(parsed.as_mixed().density(), m.density()) == 0.0);
}

TEST_CASE("spin-only files") {
    const StateFile f = parse_state(R"({"dims":[2,2,2],"amps":[[0.6,0],[0,0],[0,0],[0,0],
        [0,0],[0,0],[0,0],[0,0.8]]})");
    CHECK(f.is_spin());
    CHECK(f.spin_density()(7, 7).real() == doctest::Approx(0.64));
    CHECK_THROWS_AS(f.as_composite(), InputError);
}

TEST_CASE("invalid state files") {
    CHECK_THROWS_AS(parse_state("{"), InputError);
    CHECK_THROWS_AS(parse_state(R"({"dims":[2,2,2]})"), InputError);
    CHECK_THROWS_AS(parse_state(R"({"dims":[2],"amps":[[1,0],[0,0]],"ensemble":[]})"),
                    InputError);
    CHECK_THROWS_AS(parse_state(R"({"dims":[2],"amps":[[1,0]]})"), InputError);
    CHECK_THROWS_AS(parse_state(R"({"dims":[2],"amps":[[1,0],[1,0]]})"), InputError);
    CHECK_THROWS_AS(parse_state(R"({"dims":[2],"amps":[[1,0],["x",0]]})"), InputError);
    CHECK_THROWS_AS(parse_state(R"({"dims":[2],"ensemble":[{"weight":0.4,"amps":[[1,0],[0,0]]}]})"),
                    InputError);
    try {
        parse_state(R"({"dims":[2],"ensemble":[{"weight":1,"amps":[[1,0],[0]]}]})");
        FAIL("expected an error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("ensemble[0].amps[1]") != std::string::npos);
    }
    CHECK_THROWS_AS(read_state("/nonexistent/relgme.json"), InputError);
}

TEST_CASE("matrix round trip") {
    const ComplexMatrix m(2, 2, {{0.1, 0.2}, 3.0, {0, -1}, 1e-17});
    CHECK(frobenius_distance(parse_matrix(format_matrix(m)), m) == 0.0);
}
