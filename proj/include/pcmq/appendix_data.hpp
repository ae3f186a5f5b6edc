#pragma once
// Appendix quantile tables (ATI classes, RE loss, n = 4..7, REV and GM) as
// printed, in the table file format. Must stay byte-identical to
// data/appendix_tables.csv.

#include <cstdint>
#include <string_view>

namespace pcmq {

inline constexpr std::string_view kAppendixTablesCsv = R"csv(n,method,class_lo,class_hi,mean_ati,q10,median,q90,mean_err
4,REV,0.000,0.173,0.1111,0.0322,0.0714,0.1765,0.1248
4,REV,0.173,0.207,0.1867,0.0376,0.0874,0.1995,0.1480
4,REV,0.207,0.240,0.2230,0.0489,0.1135,0.2259,0.1369
4,REV,0.240,0.274,0.2614,0.0492,0.1189,0.2762,0.2106
4,REV,0.274,0.308,0.2895,0.0524,0.1323,0.2647,0.1883
4,REV,0.308,0.341,0.3251,0.0733,0.1576,0.3046,0.2186
4,REV,0.341,0.375,0.3586,0.0813,0.1692,0.3545,0.2566
4,REV,0.375,0.409,0.3918,0.0842,0.1776,0.3918,0.2755
4,REV,0.409,0.443,0.4260,0.0885,0.1861,0.4314,0.3738
4,REV,0.443,0.476,0.4593,0.0921,0.1945,0.4438,0.3326
4,REV,0.476,0.510,0.4925,0.0963,0.1986,0.5075,0.4032
4,REV,0.510,0.544,0.5264,0.0989,0.2087,0.6167,0.5741
4,REV,0.544,0.577,0.5597,0.1065,0.2285,0.9665,0.7165
4,REV,0.577,0.611,0.5930,0.1157,0.2590,1.4399,0.8798
4,REV,0.611,inf,0.6738,0.1496,0.5685,4.9532,2.6707
5,REV,0.000,0.188,0.1403,0.0393,0.0781,0.1537,0.1131
5,REV,0.188,0.213,0.2013,0.0455,0.0927,0.1830,0.1419
5,REV,0.213,0.237,0.2252,0.0502,0.1026,0.2002,0.1623
5,REV,0.237,0.262,0.2498,0.0577,0.1152,0.2234,0.1607
5,REV,0.262,0.286,0.2743,0.0622,0.1261,0.2526,0.1967
5,REV,0.286,0.311,0.2988,0.0682,0.1334,0.2764,0.2078
5,REV,0.311,0.335,0.3231,0.0732,0.1411,0.2958,0.2183
5,REV,0.335,0.360,0.3476,0.0779,0.1499,0.3476,0.2610
5,REV,0.360,0.384,0.3720,0.0816,0.1595,0.4107,0.2868
5,REV,0.384,0.409,0.3959,0.0869,0.1693,0.4974,0.3922
5,REV,0.409,0.433,0.4206,0.0907,0.1835,0.6375,0.4050
5,REV,0.433,0.458,0.4448,0.0975,0.2081,0.9019,0.5648
5,REV,0.458,0.482,0.4692,0.1061,0.2490,1.3716,0.7300
5,REV,0.482,0.507,0.4939,0.1185,0.3192,1.9143,1.0793
5,REV,0.507,inf,0.5633,0.1694,0.8982,5.6261,3.6842
6,REV,0.000,0.194,0.1570,0.0428,0.0789,0.1440,0.1007
6,REV,0.194,0.214,0.2043,0.0490,0.0918,0.1656,0.1247
6,REV,0.214,0.234,0.2244,0.0543,0.0987,0.1782,0.1396
6,REV,0.234,0.254,0.2444,0.0583,0.11052,0.2004,0.1744
6,REV,0.254,0.274,0.2643,0.0620,0.1126,0.2256,0.1980
6,REV,0.274,0.294,0.2842,0.0663,0.1194,0.2615,0.2132
6,REV,0.294,0.314,0.3040,0.0706,0.1284,0.3042,0.2224
6,REV,0.314,0.334,0.3239,0.0751,0.1392,0.3654,0.2702
6,REV,0.334,0.354,0.3438,0.0799,0.1507,0.4493,0.3493
6,REV,0.354,0.374,0.3638,0.0866,0.1690,0.5996,0.4314
6,REV,0.374,0.394,0.3837,0.0921,0.1922,0.7899,0.5753
6,REV,0.394,0.414,0.4035,0.0992,0.2259,1.0904,0.7326
6,REV,0.414,0.434,0.4235,0.1099,0.3090,1.7322,1.2208
6,REV,0.434,0.454,0.4434,0.1210,0.4270,2.2000,1.4294
6,REV,0.454,inf,0.5009,0.1801,0.9724,6.4509,3.2361
7,REV,0.000,0.194,0.162,0.0453,0.0764,0.1350,0.1033
7,REV,0.194,0.212,0.204,0.0499,0.0860,0.1548,0.1288
7,REV,0.212,0.229,0.221,0.0535,0.0922,0.1719,0.1442
7,REV,0.229,0.247,0.238,0.0574,0.0994,0.1934,0.1562
7,REV,0.247,0.265,0.256,0.0613,0.1056,0.2156,0.1842
7,REV,0.265,0.282,0.273,0.0652,0.1139,0.2463,0.2064
7,REV,0.282,0.300,0.291,0.0689,0.1223,0.3074,0.2404
7,REV,0.300,0.317,0.308,0.0731,0.1327,0.3771,0.2836
7,REV,0.317,0.335,0.326,0.0786,0.1489,0.4867,0.3341
7,REV,0.335,0.353,0.343,0.0863,0.1734,0.6389,0.4274
7,REV,0.353,0.370,0.361,0.0918,0.2090,0.8335,0.5286
7,REV,0.370,0.388,0.378,0.1025,0.2651,1.1082,0.6795
7,REV,0.388,0.405,0.396,0.1144,0.3563,1.4908,0.8430
7,REV,0.405,0.423,0.413,0.1280,0.4644,2.1353,1.2980
7,REV,0.423,inf,0.466,0.1944,1.0171,7.5328,3.4828
4,GM,0.000,0.173,0.1111,0.0324,0.0700,0.1780,0.1242
4,GM,0.173,0.207,0.1867,0.0371,0.0836,0.1939,0.1460
4,GM,0.207,0.240,0.2230,0.0469,0.1144,0.2182,0.1342
4,GM,0.240,0.274,0.2614,0.0488,0.1195,0.2688,0.2029
4,GM,0.274,0.308,0.2895,0.0516,0.1281,0.2576,0.1834
4,GM,0.308,0.341,0.3251,0.0805,0.1548,0.2879,0.2082
4,GM,0.341,0.375,0.3586,0.0883,0.1710,0.3146,0.2433
4,GM,0.375,0.409,0.3918,0.0924,0.1844,0.3347,0.2571
4,GM,0.409,0.443,0.4260,0.1005,0.1941,0.3551,0.3329
4,GM,0.443,0.476,0.4593,0.1101,0.1998,0.3520,0.2964
4,GM,0.476,0.510,0.4925,0.1159,0.2017,0.3975,0.3262
4,GM,0.510,0.544,0.5264,0.1229,0.2042,0.4681,0.4317
4,GM,0.544,0.577,0.5597,0.1261,0.2134,0.6839,0.5168
4,GM,0.577,0.611,0.5930,0.1330,0.2215,0.9398,0.6015
4,GM,0.611,inf,0.6738,0.1527,0.3499,2.5202,1.1846
5,GM,0.000,0.188,0.1403,0.0384,0.0758,0.1496,0.1102
5,GM,0.188,0.213,0.2013,0.0433,0.0898,0.1762,0.1356
5,GM,0.213,0.237,0.2252,0.0492,0.0995,0.1874,0.1515
5,GM,0.237,0.262,0.2498,0.0559,0.1108,0.2057,0.1475
5,GM,0.262,0.286,0.2743,0.0618,0.1229,0.2194,0.1772
5,GM,0.286,0.311,0.2988,0.0689,0.1296,0.2328,0.1814
5,GM,0.311,0.335,0.3231,0.0745,0.1373,0.2457,0.1932
5,GM,0.335,0.360,0.3476,0.0803,0.1449,0.2786,0.2263
5,GM,0.360,0.384,0.3720,0.0867,0.1519,0.3171,0.2397
5,GM,0.384,0.409,0.3959,0.0927,0.1559,0.3827,0.3062
5,GM,0.409,0.433,0.4206,0.0964,0.1632,0.4709,0.3148
5,GM,0.433,0.458,0.4448,0.1005,0.1745,0.6285,0.4056
5,GM,0.458,0.482,0.4692,0.1055,0.1936,0.9010,0.5006
5,GM,0.482,0.507,0.4939,0.1133,0.2232,1.2012,0.6908
5,GM,0.507,inf,0.5633,0.1406,0.5300,2.8428,1.8051
6,GM,0.000,0.194,0.1570,0.0413,0.0761,0.1362,0.0954
6,GM,0.194,0.214,0.2043,0.0461,0.0871,0.1518,0.1148
6,GM,0.214,0.234,0.2244,0.0519,0.0943,0.1608,0.1278
6,GM,0.234,0.254,0.2444,0.0556,0.0993,0.1745,0.1564
6,GM,0.254,0.274,0.2643,0.0600,0.1054,0.1896,0.1695
6,GM,0.274,0.294,0.2842,0.0644,0.1116,0.2136,0.1831
6,GM,0.294,0.314,0.3040,0.0684,0.1181,0.2426,0.1858
6,GM,0.314,0.334,0.3239,0.0730,0.1247,0.2826,0.2184
6,GM,0.334,0.354,0.3438,0.0771,0.1316,0.3396,0.2688
6,GM,0.354,0.374,0.3638,0.0810,0.1404,0.4366,0.3161
6,GM,0.374,0.394,0.3837,0.0862,0.1525,0.5567,0.3967
6,GM,0.394,0.414,0.4035,0.0906,0.1702,0.7314,0.4822
6,GM,0.414,0.434,0.4235,0.0975,0.2137,1.0455,0.7569
6,GM,0.434,0.454,0.4434,0.1062,0.2791,1.3872,0.8573
6,GM,0.454,inf,0.5009,0.1372,0.5867,3.1325,1.6558
7,GM,0.000,0.194,0.162,0.0424,0.0723,0.1225,0.945
7,GM,0.194,0.212,0.204,0.0460,0.0796,0.1381,0.1150
7,GM,0.212,0.229,0.221,0.0494,0.0850,0.1475,0.1277
7,GM,0.229,0.247,0.238,0.0542,0.0907,0.1595,0.1360
7,GM,0.247,0.265,0.256,0.0572,0.0956,0.1734,0.1537
7,GM,0.265,0.282,0.273,0.0611,0.1011,0.1941,0.1702
7,GM,0.282,0.300,0.291,0.0640,0.1072,0.2345,0.1916
7,GM,0.300,0.317,0.308,0.0680,0.1136,0.2793,0.2220
7,GM,0.317,0.335,0.326,0.0715,0.1226,0.3600,0.2526
7,GM,0.335,0.353,0.343,0.0767,0.1351,0.4512,0.3105
7,GM,0.353,0.370,0.361,0.0808,0.1556,0.5578,0.3722
7,GM,0.370,0.388,0.378,0.0883,0.1884,0.7042,0.4576
7,GM,0.388,0.405,0.396,0.0976,0.2367,0.9399,0.5426
7,GM,0.405,0.423,0.413,0.1041,0.2977,1.3014,0.8001
7,GM,0.423,inf,0.466,0.1422,0.6174,3.8187,1.8220
)csv";

// FNV-1a (64 bit) of kAppendixTablesCsv.
inline constexpr std::uint64_t kAppendixTablesChecksum = 0xce687192d4e35002ULL;

}  // namespace pcmq
