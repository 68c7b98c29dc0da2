#pragma once

#include "qsl2/qcoeff.hpp"
#include "qsl2/words.hpp"
#include "qsl2/rewrite.hpp"
#include "qsl2/ktheory.hpp"
#include "qsl2/nilhecke.hpp"
#include "qsl2/homdim.hpp"
#include "qsl2/parse.hpp"
#include "qsl2/corpus.hpp"
#include "qsl2/report.hpp"
