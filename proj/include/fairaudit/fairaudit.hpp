#pragma once

#include "fairaudit/audit.hpp"
#include "fairaudit/backend.hpp"
#include "fairaudit/common.hpp"
#include "fairaudit/corpus.hpp"
#include "fairaudit/extraction.hpp"
#include "fairaudit/fairness.hpp"
#include "fairaudit/http_backend.hpp"
#include "fairaudit/metrics.hpp"
#include "fairaudit/profiles.hpp"
#include "fairaudit/prompts.hpp"
#include "fairaudit/report.hpp"
#include "fairaudit/sha256.hpp"
#include "fairaudit/stats.hpp"
#include "fairaudit/synthetic.hpp"
