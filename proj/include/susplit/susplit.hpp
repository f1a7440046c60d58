#pragma once

#include "susplit/chains.hpp"
#include "susplit/complexes.hpp"
#include "susplit/core.hpp"
#include "susplit/diagonal.hpp"
#include "susplit/json_io.hpp"
#include "susplit/models.hpp"
#include "susplit/polyprod.hpp"
#include "susplit/posets.hpp"
#include "susplit/report.hpp"
#include "susplit/retractile.hpp"
#include "susplit/snf.hpp"
#include "susplit/ssets.hpp"
