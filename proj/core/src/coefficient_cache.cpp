#include "niemeier/coefficient_cache.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace niemeier {

CoefficientCache::CoefficientCache(std::filesystem::path directory) : directory_(std::move(directory)) {
    if (!directory_.empty()) {
        load();
    }
}

CoefficientCache::~CoefficientCache() {
    try {
        flush();
    } catch (...) {
    }
}

std::filesystem::path CoefficientCache::file() const {
    return directory_.empty() ? std::filesystem::path{} : directory_ / kFileName;
}

void CoefficientCache::load() {
    std::ifstream in(file());
    if (!in) {
        return;
    }
    std::string line;
    if (!std::getline(in, line) || line != kSchema) {
        // unknown schema: start over
        dirty_ = true;
        return;
    }
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string name;
        int degree = -1;
        std::string encoding;
        std::string value;
        std::string extra;
        if (!(ls >> name >> degree >> encoding >> value) || (ls >> extra)) {
            ++ignored_;
            continue;
        }
        try {
            std::vector<std::int64_t> enc;
            std::istringstream es(encoding);
            std::string part;
            while (std::getline(es, part, ',')) {
                std::size_t used = 0;
                enc.push_back(std::stoll(part, &used));
                if (used != part.size()) {
                    throw std::invalid_argument("trailing characters");
                }
            }
            const IndexMatrix t = IndexMatrix::from_encoding(degree, enc);
            std::size_t used = 0;
            if (value.empty() || value[0] == '-') {
                throw std::invalid_argument("negative count");
            }
            const std::uint64_t v = std::stoull(value, &used);
            if (used != value.size() || !t.is_psd()) {
                throw std::invalid_argument("bad record");
            }
            records_[{name, degree, t}] = v;
        } catch (const std::exception&) {
            ++ignored_;
        }
    }
    if (ignored_ > 0) {
        dirty_ = true;
    }
}

std::optional<std::uint64_t> CoefficientCache::lookup(const std::string& form, const IndexMatrix& t) const {
    std::lock_guard lock(mutex_);
    const auto it = records_.find({form, t.degree(), t});
    if (it == records_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void CoefficientCache::store(const std::string& form, const IndexMatrix& t, std::uint64_t value) {
    std::lock_guard lock(mutex_);
    auto [it, inserted] = records_.try_emplace({form, t.degree(), t}, value);
    if (inserted || it->second != value) {
        it->second = value;
        dirty_ = true;
    }
}

void CoefficientCache::flush() {
    std::lock_guard lock(mutex_);
    if (directory_.empty() || !dirty_) {
        return;
    }
    std::filesystem::create_directories(directory_);
    const std::filesystem::path target = file();
    std::filesystem::path temp = target;
    temp += ".tmp";
    {
        std::ofstream out(temp, std::ios::trunc);
        out << kSchema << '\n';
        for (const auto& [key, value] : records_) {
            const auto& [name, degree, t] = key;
            out << name << ' ' << degree << ' ' << t.encoding_string() << ' ' << value << '\n';
        }
        if (!out) {
            throw std::runtime_error("cannot write cache file " + temp.string());
        }
    }
    std::filesystem::rename(temp, target);
    dirty_ = false;
}

std::size_t CoefficientCache::size() const {
    std::lock_guard lock(mutex_);
    return records_.size();
}

} // namespace niemeier
