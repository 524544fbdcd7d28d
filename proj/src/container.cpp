#include "skelact/container.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include <json.hpp>

#include "skelact/common.hpp"

static_assert(std::endian::native == std::endian::little,
              "SKL1 i/o assumes a little-endian host");

namespace skelact {

namespace {

constexpr uint32_t kVersion = 1;
constexpr uint16_t kFlagConf = 1u << 0;
constexpr uint16_t kFlagImageSize = 1u << 1;
constexpr uint16_t kFlagThreeD = 1u << 2;

template <typename T>
void write_pod(std::ostream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_pod(std::istream& is) {
    T v;
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw FormatError("truncated container payload");
    return v;
}

std::shared_ptr<const JointLayout> layout_for_joints(int v) {
    // The format stores no layout name; V identifies the built-in topology.
    static const auto ntu = std::make_shared<const JointLayout>(builtin_layout("ntu25"));
    static const auto coco = std::make_shared<const JointLayout>(builtin_layout("coco17"));
    if (v == ntu->num_joints) return ntu;
    if (v == coco->num_joints) return coco;
    throw FormatError("container joint count " + std::to_string(v) +
                      " matches no built-in layout");
}

}  // namespace

std::string splits_sidecar_path(const std::string& container_path) {
    return container_path + ".splits.json";
}

void save_container(const DatasetContainer& c, const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw FormatError("cannot open '" + path + "' for writing");

    os.write("SKL1", 4);
    write_pod<uint32_t>(os, kVersion);
    write_pod<uint32_t>(os, static_cast<uint32_t>(c.num_classes));
    write_pod<uint64_t>(os, static_cast<uint64_t>(c.samples.size()));

    for (const auto& s : c.samples) {
        write_pod<uint32_t>(os, static_cast<uint32_t>(s.label));
        write_pod<uint16_t>(os, static_cast<uint16_t>(s.persons));
        write_pod<uint16_t>(os, static_cast<uint16_t>(s.frames));
        write_pod<uint16_t>(os, static_cast<uint16_t>(s.joints));
        write_pod<uint16_t>(os, static_cast<uint16_t>(s.channels));
        uint16_t flags = 0;
        if (s.has_conf()) flags |= kFlagConf;
        if (s.image_size) flags |= kFlagImageSize;
        if (s.coord_type == CoordType::three_d) flags |= kFlagThreeD;
        write_pod<uint16_t>(os, flags);
        if (s.image_size) {
            write_pod<uint16_t>(os, s.image_size->first);
            write_pod<uint16_t>(os, s.image_size->second);
        }
        os.write(reinterpret_cast<const char*>(s.coords.data()),
                 static_cast<std::streamsize>(s.coords.size() * sizeof(float)));
        if (s.has_conf()) {
            os.write(reinterpret_cast<const char*>(s.conf.data()),
                     static_cast<std::streamsize>(s.conf.size() * sizeof(float)));
        }
    }
    if (!os) throw FormatError("short write to '" + path + "'");

    nlohmann::json j = nlohmann::json::object();
    for (const auto& [name, idx] : c.splits) j[name] = idx;
    std::ofstream js(splits_sidecar_path(path), std::ios::trunc);
    if (!js) throw FormatError("cannot write splits sidecar for '" + path + "'");
    js << j.dump(2) << "\n";
}

DatasetContainer load_container(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw FormatError("cannot open '" + path + "'");

    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "SKL1", 4) != 0) {
        throw FormatError("'" + path + "' is not an SKL1 container (bad magic)");
    }
    uint32_t version = read_pod<uint32_t>(is);
    if (version != kVersion) {
        throw FormatError("unsupported SKL1 version " + std::to_string(version));
    }

    DatasetContainer c;
    c.num_classes = static_cast<int>(read_pod<uint32_t>(is));
    uint64_t count = read_pod<uint64_t>(is);
    c.samples.reserve(count);

    for (uint64_t i = 0; i < count; ++i) {
        SkeletonSequence s;
        s.label = static_cast<int>(read_pod<uint32_t>(is));
        s.persons = read_pod<uint16_t>(is);
        s.frames = read_pod<uint16_t>(is);
        s.joints = read_pod<uint16_t>(is);
        s.channels = read_pod<uint16_t>(is);
        uint16_t flags = read_pod<uint16_t>(is);
        s.coord_type = (flags & kFlagThreeD) ? CoordType::three_d : CoordType::two_d;
        if (flags & kFlagImageSize) {
            uint16_t w = read_pod<uint16_t>(is);
            uint16_t h = read_pod<uint16_t>(is);
            s.image_size = {w, h};
        }
        s.layout = layout_for_joints(s.joints);
        size_t n = static_cast<size_t>(s.persons) * s.frames * s.joints * s.channels;
        s.coords.resize(n);
        is.read(reinterpret_cast<char*>(s.coords.data()),
                static_cast<std::streamsize>(n * sizeof(float)));
        if (!is) throw FormatError("truncated coords in sample " + std::to_string(i));
        if (flags & kFlagConf) {
            size_t nc = static_cast<size_t>(s.persons) * s.frames * s.joints;
            s.conf.resize(nc);
            is.read(reinterpret_cast<char*>(s.conf.data()),
                    static_cast<std::streamsize>(nc * sizeof(float)));
            if (!is) throw FormatError("truncated conf in sample " + std::to_string(i));
        }
        c.samples.push_back(std::move(s));
    }

    std::ifstream js(splits_sidecar_path(path));
    if (js) {
        nlohmann::json j;
        try {
            js >> j;
        } catch (const nlohmann::json::exception& e) {
            throw FormatError(std::string("bad splits sidecar: ") + e.what());
        }
        for (auto it = j.begin(); it != j.end(); ++it) {
            std::vector<size_t> idx = it.value().get<std::vector<size_t>>();
            for (size_t v : idx) {
                if (v >= c.samples.size()) {
                    throw FormatError("split '" + it.key() + "' index " +
                                      std::to_string(v) + " out of range");
                }
            }
            c.splits[it.key()] = std::move(idx);
        }
    }
    return c;
}

}  // namespace skelact
