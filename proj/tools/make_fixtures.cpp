// Writes the fixture corpus into the directory given on the command line.
#include <fstream>
#include <iostream>

#include "homcat/fixtures.hpp"
#include "homcat/serialize.hpp"

using namespace homcat;
using namespace homcat::fixtures;

namespace {

void put(const std::string& dir, const std::string& file, const io::json& j) {
    std::ofstream out(dir + "/" + file, std::ios::binary);
    out << io::manifest_text(j);
    if (!out) throw std::runtime_error("cannot write " + file);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_fixtures DIR\n";
        return 2;
    }
    std::string dir = argv[1];
    put(dir, "kz2.hom", io::manifest(group_algebra(2), "kz2"));
    put(dir, "kz3.hom", io::manifest(group_algebra(3), "kz3"));
    put(dir, "h4.hom", io::manifest(sweedler(), "h4"));
    put(dir, "frob.map", io::map_manifest(group_power_map(3, 2), "frob"));
    put(dir, "h4_scale2.map", io::map_manifest(sweedler_scaling(2), "h4_scale2"));
    put(dir, "kz3_alpha.hom", io::manifest(kz3().H, "kz3_alpha"));
    auto h4a = h4_alpha2().H;
    put(dir, "h4_alpha2.hom", io::manifest(h4a, "h4_alpha2"));

    // x·x = 1 instead of 0
    auto bad = h4a;
    bad.bialgebra.algebra.mult.set(0, 2 * 4 + 2, 1);
    put(dir, "h4_alpha2_corrupt.hom", io::manifest(bad, "h4_alpha2_corrupt"));

    auto H = group_algebra(2);
    put(dir, "kz2_yd.datum", io::manifest(yetter_drinfeld_datum(H), "kz2_yd"));
    auto K = yd_kernel(H);
    put(dir, "kz2_yd.kernel", io::manifest(K, 2, 2, "kz2_yd_kernel", "kz2_yd"));
    // Q(1⊗1) = 2(1⊗1): still invertible, breaks the first hexagon condition
    BraidingKernel P{K.q, std::nullopt, false};
    P.q.add_to(0, 0, 1);
    put(dir, "kz2_perturbed.kernel", io::manifest(P, 2, 2, "kz2_perturbed", "kz2_yd"));
    return 0;
}
