#include "hyperdeg/report.hpp"

#include <algorithm>

namespace hyperdeg {

void Report::add(std::string check, std::string ref, std::string expected, std::string got, bool pass)
{
    checks_.push_back({std::move(check), std::move(ref), std::move(expected), std::move(got), pass});
}

void Report::append(const Report& other)
{
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

int Report::passed() const
{
    return int(std::count_if(checks_.begin(), checks_.end(), [](const CheckEntry& c) { return c.pass; }));
}

int Report::failed() const
{
    return int(checks_.size()) - passed();
}

const CheckEntry* Report::find(const std::string& check) const
{
    for (const auto& c : checks_)
        if (c.check == check) return &c;
    return nullptr;
}

}  // namespace hyperdeg
