#ifndef ADJFACT_REPORT_HPP
#define ADJFACT_REPORT_HPP

#include <string>
#include <vector>

namespace adjfact {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckItem {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;      // filled on failure / skip
    long millis = 0;         // wall time; diagnostic only, never canonical

    bool passed() const { return status != CheckStatus::Fail; }
};

struct CheckReport {
    std::vector<CheckItem> items;

    void add(std::string name, bool ok, std::string detail = "") {
        items.push_back({std::move(name),
                         ok ? CheckStatus::Pass : CheckStatus::Fail,
                         std::move(detail), 0});
    }
    void skip(std::string name, std::string why) {
        items.push_back({std::move(name), CheckStatus::Skip, std::move(why), 0});
    }
    void merge(const CheckReport& other) {
        items.insert(items.end(), other.items.begin(), other.items.end());
    }
    bool all_passed() const {
        for (const auto& it : items)
            if (it.status == CheckStatus::Fail) return false;
        return true;
    }
};

} // namespace adjfact

#endif
