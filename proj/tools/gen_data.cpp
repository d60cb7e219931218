// Regenerates the files under data/ and prints their checksums.
//
//   shrike_gen_data <output-dir>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "shrike/registry.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: %s <output-dir>\n", argv[0]);
        return 2;
    }
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);
    for (const auto& asset : shrike::kDataAssets) {
        const std::string text = shrike::format_data_file(shrike::generate_asset(asset.file));
        std::ofstream(dir / asset.file, std::ios::binary) << text;
        std::printf("%-16s 0x%016llXULL\n", std::string(asset.file).c_str(),
                    static_cast<unsigned long long>(shrike::fnv1a64(text)));
    }
    return 0;
}
