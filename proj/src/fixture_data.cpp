// Embedded copies of data/manifest.csv and data/fixtures/*.csv so the
// library works without an installed data directory. A test asserts byte
// equality with the files; edit the CSVs and mirror the change here.

#include "fsf/tables.hpp"

namespace fsf {
namespace {

constexpr std::string_view kManifest = R"FSF(table,rows
lpf-cos-12,609
lpf-cos-3t,180
lpf-cos-4t,2
lpf-sine-12,177
lpf-sine-3t,50
bpf-cos,65
comparative,31
sensitivity,3
text,15
)FSF";

constexpr std::string_view kLpfCos12 = R"FSF(source,n,kind,expansion,bw,m1,t,binding,coeffs,claimed_psl_db,corrected_psl_db
this-paper-optimal,15,lowpass,cosine,1,,1,,0.43370490,,-42.2963
this-paper-optimal,15,lowpass,cosine,1,,2,,0.58518349 0.09150533,,-71.8887
this-paper-optimal,15,lowpass,cosine,2,,1,,0.41793081,,-41.2619
this-paper-optimal,15,lowpass,cosine,2,,2,,0.58546576 0.09754605,,-71.2998
this-paper-optimal,15,lowpass,cosine,3,,1,,0.41047294,,-41.2532
this-paper-optimal,15,lowpass,cosine,3,,2,,0.57265766 0.09175074,,-73.5765
this-paper-optimal,15,lowpass,cosine,4,,1,,0.40402635,,-41.9434
this-paper-optimal,15,lowpass,cosine,4,,2,,0.54810045 0.07804740,,-80.0717
this-paper-optimal,15,lowpass,cosine,5,,1,,0.39255217,,-44.3219
this-paper-optimal,15,lowpass,cosine,5,,2,,0.49824241 0.05124120,,-105.5856
this-paper-optimal,15,lowpass,cosine,6,,1,,0.35766181,,-56.0065
this-paper-optimal,16,lowpass,cosine,1,,1,,0.43306933,,-42.4198
this-paper-optimal,16,lowpass,cosine,1,,2,,0.58621581 0.09225584,,-71.5979
this-paper-optimal,16,lowpass,cosine,2,,1,,0.41702850,,-41.3899
this-paper-optimal,16,lowpass,cosine,2,,2,,0.58818922 0.09938977,,-70.6681
this-paper-optimal,16,lowpass,cosine,3,,1,,0.41001590,,-41.2493
this-paper-optimal,16,lowpass,cosine,3,,2,,0.57815395 0.09528050,,-72.2380
this-paper-optimal,16,lowpass,cosine,4,,1,,0.40474097,,-41.6636
this-paper-optimal,16,lowpass,cosine,4,,2,,0.55924119 0.08476728,,-76.6370
this-paper-optimal,16,lowpass,cosine,5,,1,,0.39666905,,-43.2175
this-paper-optimal,16,lowpass,cosine,5,,2,,0.52474095 0.06534979,,-89.7294
this-paper-optimal,16,lowpass,cosine,6,,1,,0.37587659,,-49.3332
this-paper-optimal,23,lowpass,cosine,1,,1,,0.43086895,,-42.8184
this-paper-optimal,23,lowpass,cosine,1,,2,,0.58926940 0.09450895,,-70.7414
this-paper-optimal,23,lowpass,cosine,2,,1,,0.41258373,,-42.0778
this-paper-optimal,23,lowpass,cosine,2,,2,,0.59740421 0.10579189,,-68.4808
this-paper-optimal,23,lowpass,cosine,3,,1,,0.40472319,,-41.9269
this-paper-optimal,23,lowpass,cosine,3,,2,,0.59662868 0.10756017,,-68.1211
this-paper-optimal,23,lowpass,cosine,4,,1,,0.40084247,,-41.8555
this-paper-optimal,23,lowpass,cosine,4,,2,,0.59285307 0.10626257,,-68.5997
this-paper-optimal,23,lowpass,cosine,5,,1,,0.39932943,,-41.7107
this-paper-optimal,23,lowpass,cosine,5,,2,,0.58678652 0.10314307,,-69.3988
this-paper-optimal,24,lowpass,cosine,1,,1,,0.43070334,,-42.8472
this-paper-optimal,24,lowpass,cosine,1,,2,,0.58927173 0.09451579,,-70.7350
this-paper-optimal,24,lowpass,cosine,2,,1,,0.41221543,,-42.1351
this-paper-optimal,24,lowpass,cosine,2,,2,,0.59769312 0.10601117,,-68.3741
this-paper-optimal,24,lowpass,cosine,3,,1,,0.40420618,,-41.9992
this-paper-optimal,24,lowpass,cosine,3,,2,,0.59734875 0.10807571,,-67.8980
this-paper-optimal,24,lowpass,cosine,4,,1,,0.40012943,,-41.9524
this-paper-optimal,24,lowpass,cosine,4,,2,,0.59420082 0.10717815,,-68.2537
this-paper-optimal,24,lowpass,cosine,5,,1,,0.39834675,,-41.8455
this-paper-optimal,24,lowpass,cosine,5,,2,,0.58904102 0.10458760,,-68.9864
this-paper-optimal,32,lowpass,cosine,1,,1,,0.42986907,,-42.9927
this-paper-optimal,32,lowpass,cosine,1,,2,,0.58834622 0.09387983,,-70.9338
this-paper-optimal,32,lowpass,cosine,2,,1,,0.41047172,,-42.3969
this-paper-optimal,32,lowpass,cosine,2,,2,,0.59793396 0.10625935,,-68.1946
this-paper-optimal,32,lowpass,cosine,3,,1,,0.40156510,,-42.3722
this-paper-optimal,32,lowpass,cosine,3,,2,,0.59946636 0.10965529,,-67.1876
this-paper-optimal,32,lowpass,cosine,4,,1,,0.39664461,,-42.4171
this-paper-optimal,32,lowpass,cosine,4,,2,,0.59895684 0.11055387,,-66.8408
this-paper-optimal,32,lowpass,cosine,5,,1,,0.39371425,,-42.4563
this-paper-optimal,32,lowpass,cosine,5,,2,,0.59758419 0.11038922,,-66.8248
this-paper-optimal,32,lowpass,cosine,6,,1,,0.39201059,,-42.4640
this-paper-optimal,32,lowpass,cosine,6,,2,,0.59561546 0.10957832,,-67.0397
this-paper-optimal,32,lowpass,cosine,7,,1,,0.39117897,,-42.4316
this-paper-optimal,32,lowpass,cosine,7,,2,,0.59301126 0.10820463,,-67.4791
this-paper-optimal,32,lowpass,cosine,8,,1,,0.39105197,,-42.3541
this-paper-optimal,32,lowpass,cosine,8,,2,,0.58953594 0.10617212,,-68.2070
this-paper-optimal,32,lowpass,cosine,9,,1,,0.39171691,,-42.1918
this-paper-optimal,32,lowpass,cosine,9,,2,,0.58466185 0.10326410,,-69.1045
this-paper-optimal,32,lowpass,cosine,10,,1,,0.39296641,,-41.9840
this-paper-optimal,32,lowpass,cosine,10,,2,,0.57766399 0.09906476,,-70.3097
this-paper-optimal,32,lowpass,cosine,11,,1,,0.39402198,,-41.8994
this-paper-optimal,32,lowpass,cosine,11,,2,,0.56707875 0.09265734,,-72.4524
this-paper-optimal,32,lowpass,cosine,12,,1,,0.39379506,,-42.1781
this-paper-optimal,32,lowpass,cosine,12,,2,,0.54961476 0.08216620,,-76.9829
this-paper-optimal,32,lowpass,cosine,13,,1,,0.38930604,,-43.5665
this-paper-optimal,32,lowpass,cosine,13,,2,,0.51723526 0.06360209,,-90.0359
this-paper-optimal,32,lowpass,cosine,14,,1,,0.37129352,,-49.5362
this-paper-optimal,33,lowpass,cosine,1,,1,,0.42980382,,-43.0041
this-paper-optimal,33,lowpass,cosine,1,,2,,0.58820452 0.09378069,,-70.9667
this-paper-optimal,33,lowpass,cosine,2,,1,,0.41035321,,-42.4130
this-paper-optimal,33,lowpass,cosine,2,,2,,0.59779841 0.10616880,,-68.2269
this-paper-optimal,33,lowpass,cosine,3,,1,,0.40135763,,-42.4017
this-paper-optimal,33,lowpass,cosine,3,,2,,0.59943808 0.10964542,,-67.1836
this-paper-optimal,33,lowpass,cosine,4,,1,,0.39637170,,-42.4538
this-paper-optimal,33,lowpass,cosine,4,,2,,0.59908293 0.11065281,,-66.7952
this-paper-optimal,33,lowpass,cosine,5,,1,,0.39336674,,-42.5015
this-paper-optimal,33,lowpass,cosine,5,,2,,0.59791667 0.11062905,,-66.7271
this-paper-optimal,33,lowpass,cosine,6,,1,,0.39157442,,-42.5194
this-paper-optimal,33,lowpass,cosine,6,,2,,0.59622701 0.11000518,,-66.8714
this-paper-optimal,33,lowpass,cosine,7,,1,,0.39063425,,-42.4996
this-paper-optimal,33,lowpass,cosine,7,,2,,0.59401406 0.10889060,,-67.2072
this-paper-optimal,33,lowpass,cosine,8,,1,,0.39037274,,-42.4376
this-paper-optimal,33,lowpass,cosine,8,,2,,0.59111407 0.10723575,,-67.7708
this-paper-optimal,33,lowpass,cosine,9,,1,,0.39076237,,-42.3185
this-paper-optimal,33,lowpass,cosine,9,,2,,0.58718548 0.10485574,,-68.6613
this-paper-optimal,33,lowpass,cosine,10,,1,,0.39191304,,-42.1096
this-paper-optimal,33,lowpass,cosine,10,,2,,0.58155719 0.10150304,,-69.5651
this-paper-optimal,33,lowpass,cosine,11,,1,,0.39332233,,-41.9212
this-paper-optimal,33,lowpass,cosine,11,,2,,0.57335799 0.09655480,,-71.0633
this-paper-optimal,33,lowpass,cosine,12,,1,,0.39419302,,-41.9261
this-paper-optimal,33,lowpass,cosine,12,,2,,0.56048567 0.08878702,,-73.8692
this-paper-optimal,33,lowpass,cosine,13,,1,,0.39304441,,-42.4524
this-paper-optimal,33,lowpass,cosine,13,,2,,0.53786652 0.07542921,,-80.4528
this-paper-optimal,33,lowpass,cosine,14,,1,,0.38539710,,-44.6478
this-paper-optimal,33,lowpass,cosine,14,,2,,0.49069109 0.04982084,,-105.8873
this-paper-optimal,33,lowpass,cosine,15,,1,,0.35360365,,-56.1752
this-paper-optimal,47,lowpass,cosine,1,,1,,0.42927668,,-43.0962
this-paper-optimal,47,lowpass,cosine,1,,2,,0.58707888 0.09299780,,-71.2264
this-paper-optimal,47,lowpass,cosine,2,,1,,0.40939381,,-42.5432
this-paper-optimal,47,lowpass,cosine,2,,2,,0.59594139 0.10490041,,-68.7215
this-paper-optimal,47,lowpass,cosine,3,,1,,0.39978146,,-42.6170
this-paper-optimal,47,lowpass,cosine,3,,2,,0.59739283 0.10831178,,-67.6360
this-paper-optimal,47,lowpass,cosine,4,,1,,0.39418653,,-42.7488
this-paper-optimal,47,lowpass,cosine,4,,2,,0.59742961 0.10963306,,-67.0923
this-paper-optimal,47,lowpass,cosine,5,,1,,0.39061577,,-42.8606
this-paper-optimal,47,lowpass,cosine,5,,2,,0.59715841 0.11026072,,-66.7643
this-paper-optimal,47,lowpass,cosine,6,,1,,0.38817537,,-42.9532
this-paper-optimal,47,lowpass,cosine,6,,2,,0.59681632 0.11056815,,-66.5596
this-paper-optimal,47,lowpass,cosine,7,,1,,0.38647004,,-43.0227
this-paper-optimal,47,lowpass,cosine,7,,2,,0.59637757 0.11065301,,-66.4493
this-paper-optimal,47,lowpass,cosine,8,,1,,0.38528293,,-43.0694
this-paper-optimal,47,lowpass,cosine,8,,2,,0.59587274 0.11059321,,-66.4046
this-paper-optimal,47,lowpass,cosine,9,,1,,0.38448809,,-43.0945
this-paper-optimal,47,lowpass,cosine,9,,2,,0.59529922 0.11041981,,-66.4126
this-paper-optimal,47,lowpass,cosine,10,,1,,0.38401121,,-43.0985
this-paper-optimal,47,lowpass,cosine,10,,2,,0.59463336 0.11013728,,-66.4688
this-paper-optimal,47,lowpass,cosine,11,,1,,0.38381060,,-43.0813
this-paper-optimal,47,lowpass,cosine,11,,2,,0.59383272 0.10973071,,-66.5782
this-paper-optimal,48,lowpass,cosine,1,,1,,0.42925534,,-43.0999
this-paper-optimal,48,lowpass,cosine,1,,2,,0.58703396 0.09296673,,-71.2367
this-paper-optimal,48,lowpass,cosine,2,,1,,0.40935491,,-42.5485
this-paper-optimal,48,lowpass,cosine,2,,2,,0.59585835 0.10484396,,-68.7438
this-paper-optimal,48,lowpass,cosine,3,,1,,0.39972530,,-42.6239
this-paper-optimal,48,lowpass,cosine,3,,2,,0.59727667 0.10823543,,-67.6629
this-paper-optimal,48,lowpass,cosine,4,,1,,0.39409899,,-42.7607
this-paper-optimal,48,lowpass,cosine,4,,2,,0.59727391 0.10953933,,-67.1229
this-paper-optimal,48,lowpass,cosine,5,,1,,0.39050686,,-42.8748
this-paper-optimal,48,lowpass,cosine,5,,2,,0.59697330 0.11014277,,-66.8027
this-paper-optimal,48,lowpass,cosine,6,,1,,0.38804306,,-42.9701
this-paper-optimal,48,lowpass,cosine,6,,2,,0.59664297 0.11046051,,-66.5926
this-paper-optimal,48,lowpass,cosine,7,,1,,0.38631149,,-43.0426
this-paper-optimal,48,lowpass,cosine,7,,2,,0.59623920 0.11057077,,-66.4721
this-paper-optimal,48,lowpass,cosine,8,,1,,0.38509433,,-43.0929
this-paper-optimal,48,lowpass,cosine,8,,2,,0.59577847 0.11054195,,-66.4157
this-paper-optimal,48,lowpass,cosine,9,,1,,0.38426438,,-43.1221
this-paper-optimal,48,lowpass,cosine,9,,2,,0.59526075 0.11040691,,-66.4093
this-paper-optimal,48,lowpass,cosine,10,,1,,0.38374578,,-43.1311
this-paper-optimal,48,lowpass,cosine,10,,2,,0.59466656 0.11017287,,-66.4483
this-paper-optimal,64,lowpass,cosine,1,,1,,0.42903727,,-43.1381
this-paper-optimal,64,lowpass,cosine,1,,2,,0.58655939 0.09263876,,-71.3460
this-paper-optimal,64,lowpass,cosine,2,,1,,0.40895721,,-42.6026
this-paper-optimal,64,lowpass,cosine,2,,2,,0.59506850 0.10431198,,-68.9510
this-paper-optimal,64,lowpass,cosine,3,,1,,0.39915215,,-42.6945
this-paper-optimal,64,lowpass,cosine,3,,2,,0.59610745 0.10747244,,-67.9325
this-paper-optimal,64,lowpass,cosine,4,,1,,0.39331863,,-42.8552
this-paper-optimal,64,lowpass,cosine,4,,2,,0.59575157 0.10856631,,-67.4490
this-paper-optimal,64,lowpass,cosine,5,,1,,0.38946941,,-43.0041
this-paper-optimal,64,lowpass,cosine,5,,2,,0.59509667 0.10895955,,-67.1873
this-paper-optimal,64,lowpass,cosine,6,,1,,0.38676437,,-43.1287
this-paper-optimal,64,lowpass,cosine,6,,2,,0.59442057 0.10907286,,-67.0346
this-paper-optimal,64,lowpass,cosine,9,,1,,0.38215885,,-43.3757
this-paper-optimal,64,lowpass,cosine,9,,2,,0.59295724 0.10903806,,-66.8045
this-paper-optimal,64,lowpass,cosine,10,,1,,0.38128541,,-43.4261
this-paper-optimal,64,lowpass,cosine,10,,2,,0.59266771 0.10902604,,-66.7545
this-paper-optimal,64,lowpass,cosine,13,,1,,0.37975219,,-43.5100
this-paper-optimal,64,lowpass,cosine,13,,2,,0.59229094 0.10911933,,-66.6132
this-paper-optimal,64,lowpass,cosine,14,,1,,0.37951108,,-43.5191
this-paper-optimal,64,lowpass,cosine,14,,2,,0.59221567 0.10914005,,-66.5837
this-paper-optimal,64,lowpass,cosine,17,,1,,0.37950306,,-43.4768
this-paper-optimal,64,lowpass,cosine,17,,2,,0.59182472 0.10901271,,-66.5920
this-paper-optimal,64,lowpass,cosine,18,,1,,0.37973492,,-43.4382
this-paper-optimal,64,lowpass,cosine,18,,2,,0.59156137 0.10886269,,-66.6407
this-paper-optimal,64,lowpass,cosine,21,,1,,0.38124808,,-43.2319
this-paper-optimal,64,lowpass,cosine,21,,2,,0.58975336 0.10770413,,-67.0634
this-paper-optimal,64,lowpass,cosine,22,,1,,0.38210045,,-43.1231
this-paper-optimal,64,lowpass,cosine,22,,2,,0.58852173 0.10689648,,-67.3699
this-paper-optimal,64,lowpass,cosine,25,,1,,0.38636397,,-42.5899
this-paper-optimal,64,lowpass,cosine,25,,2,,0.57991904 0.10137252,,-69.3743
this-paper-optimal,64,lowpass,cosine,26,,1,,0.38869300,,-42.2937
this-paper-optimal,64,lowpass,cosine,26,,2,,0.57365692 0.09751010,,-70.5398
this-paper-optimal,64,lowpass,cosine,29,,1,,0.38754643,,-43.6627
this-paper-optimal,64,lowpass,cosine,29,,2,,0.51528631 0.06310365,,-90.1314
this-paper-optimal,64,lowpass,cosine,30,,1,,0.37016432,,-49.5895
this-paper-optimal,65,lowpass,cosine,1,,1,,0.42902868,,-43.1396
this-paper-optimal,65,lowpass,cosine,1,,2,,0.58654013 0.09262546,,-71.3505
this-paper-optimal,65,lowpass,cosine,2,,1,,0.40894153,,-42.6047
this-paper-optimal,65,lowpass,cosine,2,,2,,0.59503622 0.10429028,,-68.9595
this-paper-optimal,65,lowpass,cosine,3,,1,,0.39912959,,-42.6973
this-paper-optimal,65,lowpass,cosine,3,,2,,0.59605963 0.10744134,,-67.9436
this-paper-optimal,65,lowpass,cosine,4,,1,,0.39328911,,-42.8587
this-paper-optimal,65,lowpass,cosine,4,,2,,0.59569370 0.10852971,,-67.4611
this-paper-optimal,65,lowpass,cosine,5,,1,,0.38943270,,-43.0082
this-paper-optimal,65,lowpass,cosine,5,,2,,0.59502221 0.10891301,,-67.2024
this-paper-optimal,65,lowpass,cosine,6,,1,,0.38672010,,-43.1336
this-paper-optimal,65,lowpass,cosine,6,,2,,0.59433638 0.10902104,,-67.0510
this-paper-optimal,65,lowpass,cosine,9,,1,,0.38208839,,-43.3833
this-paper-optimal,65,lowpass,cosine,9,,2,,0.59282596 0.10895850,,-66.8290
this-paper-optimal,65,lowpass,cosine,10,,1,,0.38120453,,-43.4347
this-paper-optimal,65,lowpass,cosine,10,,2,,0.59251715 0.10893490,,-66.7826
this-paper-optimal,65,lowpass,cosine,13,,1,,0.37963164,,-43.5227
this-paper-optimal,65,lowpass,cosine,13,,2,,0.59211750 0.10901644,,-66.6435
this-paper-optimal,65,lowpass,cosine,14,,1,,0.37937338,,-43.5335
this-paper-optimal,65,lowpass,cosine,14,,2,,0.59206387 0.10905237,,-66.6081
this-paper-optimal,65,lowpass,cosine,17,,1,,0.37926625,,-43.5052
this-paper-optimal,65,lowpass,cosine,17,,2,,0.59178752 0.10900296,,-66.5872
this-paper-optimal,65,lowpass,cosine,18,,1,,0.37946021,,-43.4712
this-paper-optimal,65,lowpass,cosine,18,,2,,0.59159019 0.10889704,,-66.6198
this-paper-optimal,65,lowpass,cosine,21,,1,,0.38080016,,-43.2859
this-paper-optimal,65,lowpass,cosine,21,,2,,0.59016625 0.10799180,,-66.9479
this-paper-optimal,65,lowpass,cosine,22,,1,,0.38156370,,-43.1878
this-paper-optimal,65,lowpass,cosine,22,,2,,0.58917965 0.10734461,,-67.1914
this-paper-optimal,65,lowpass,cosine,25,,1,,0.38533147,,-42.7198
this-paper-optimal,65,lowpass,cosine,25,,2,,0.58240208 0.10291894,,-68.9351
this-paper-optimal,65,lowpass,cosine,26,,1,,0.38745303,,-42.4454
this-paper-optimal,65,lowpass,cosine,26,,2,,0.57747947 0.09988117,,-69.8022
this-paper-optimal,65,lowpass,cosine,29,,1,,0.39107958,,-42.5680
this-paper-optimal,65,lowpass,cosine,29,,2,,0.53573729 0.07478844,,-80.5632
this-paper-optimal,65,lowpass,cosine,30,,1,,0.38405404,,-44.7165
this-paper-optimal,65,lowpass,cosine,30,,2,,0.48919341 0.04951647,,-105.9563
this-paper-optimal,65,lowpass,cosine,31,,1,,0.35282424,,-56.2091
this-paper-optimal,95,lowpass,cosine,1,,1,,0.42888316,,-43.1650
this-paper-optimal,95,lowpass,cosine,1,,2,,0.58621560 0.09240170,,-71.4254
this-paper-optimal,95,lowpass,cosine,2,,1,,0.40867603,,-42.6408
this-paper-optimal,95,lowpass,cosine,2,,2,,0.59447151 0.10391291,,-69.1020
this-paper-optimal,95,lowpass,cosine,3,,1,,0.39874794,,-42.7443
this-paper-optimal,95,lowpass,cosine,3,,2,,0.59529958 0.10695127,,-68.1155
this-paper-optimal,95,lowpass,cosine,4,,1,,0.39279083,,-42.9170
this-paper-optimal,95,lowpass,cosine,4,,2,,0.59467648 0.10788749,,-67.6762
this-paper-optimal,95,lowpass,cosine,5,,1,,0.38881522,,-43.0781
this-paper-optimal,95,lowpass,cosine,5,,2,,0.59378923 0.10814819,,-67.4498
this-paper-optimal,95,lowpass,cosine,6,,1,,0.38597923,,-43.2157
this-paper-optimal,95,lowpass,cosine,6,,2,,0.59287254 0.10812396,,-67.3355
this-paper-optimal,95,lowpass,cosine,9,,1,,0.38093648,,-43.5063
this-paper-optimal,95,lowpass,cosine,9,,2,,0.59064064 0.10764825,,-67.2325
this-paper-optimal,95,lowpass,cosine,10,,1,,0.37989609,,-43.5735
this-paper-optimal,95,lowpass,cosine,10,,2,,0.59007290 0.10747576,,-67.2298
this-paper-optimal,95,lowpass,cosine,13,,1,,0.37776276,,-43.7181
this-paper-optimal,95,lowpass,cosine,13,,2,,0.58878454 0.10704080,,-67.2445
this-paper-optimal,95,lowpass,cosine,14,,1,,0.37727676,,-43.7521
this-paper-optimal,95,lowpass,cosine,14,,2,,0.58848290 0.10693736,,-67.2474
this-paper-optimal,95,lowpass,cosine,17,,1,,0.37625336,,-43.8238
this-paper-optimal,95,lowpass,cosine,17,,2,,0.58785875 0.10673191,,-67.2456
this-paper-optimal,95,lowpass,cosine,18,,1,,0.37602488,,-43.8393
this-paper-optimal,95,lowpass,cosine,18,,2,,0.58773199 0.10669668,,-67.2402
this-paper-optimal,95,lowpass,cosine,21,,1,,0.37559714,,-43.8655
this-paper-optimal,95,lowpass,cosine,21,,2,,0.58758045 0.10669701,,-67.2024
this-paper-optimal,96,lowpass,cosine,1,,1,,0.42888050,,-43.1655
this-paper-optimal,96,lowpass,cosine,1,,2,,0.58621042 0.09239815,,-71.4266
this-paper-optimal,96,lowpass,cosine,2,,1,,0.40867117,,-42.6415
this-paper-optimal,96,lowpass,cosine,2,,2,,0.59446161 0.10390656,,-69.1036
this-paper-optimal,96,lowpass,cosine,3,,1,,0.39874097,,-42.7452
this-paper-optimal,96,lowpass,cosine,3,,2,,0.59528563 0.10694231,,-68.1186
this-paper-optimal,96,lowpass,cosine,4,,1,,0.39278174,,-42.9180
this-paper-optimal,96,lowpass,cosine,4,,2,,0.59465729 0.10787539,,-67.6803
this-paper-optimal,96,lowpass,cosine,5,,1,,0.38880401,,-43.0794
this-paper-optimal,96,lowpass,cosine,5,,2,,0.59376665 0.10813426,,-67.4543
this-paper-optimal,96,lowpass,cosine,6,,1,,0.38596584,,-43.2171
this-paper-optimal,96,lowpass,cosine,6,,2,,0.59284660 0.10810822,,-67.3404
this-paper-optimal,96,lowpass,cosine,9,,1,,0.38091611,,-43.5085
this-paper-optimal,96,lowpass,cosine,9,,2,,0.59060132 0.10762491,,-67.2397
this-paper-optimal,96,lowpass,cosine,10,,1,,0.37987320,,-43.5759
this-paper-optimal,96,lowpass,cosine,10,,2,,0.59002985 0.10745038,,-67.2375
this-paper-optimal,96,lowpass,cosine,13,,1,,0.37773138,,-43.7214
this-paper-optimal,96,lowpass,cosine,13,,2,,0.58872937 0.10700878,,-67.2540
this-paper-optimal,96,lowpass,cosine,14,,1,,0.37724216,,-43.7557
this-paper-optimal,96,lowpass,cosine,14,,2,,0.58841865 0.10689989,,-67.2588
this-paper-optimal,96,lowpass,cosine,17,,1,,0.37620753,,-43.8285
this-paper-optimal,96,lowpass,cosine,17,,2,,0.58777879 0.10668569,,-67.2595
this-paper-optimal,96,lowpass,cosine,18,,1,,0.37597462,,-43.8445
this-paper-optimal,96,lowpass,cosine,18,,2,,0.58764610 0.10664713,,-67.2551
this-paper-optimal,96,lowpass,cosine,21,,1,,0.37553083,,-43.8723
this-paper-optimal,96,lowpass,cosine,21,,2,,0.58746696 0.10663133,,-67.2223
this-paper-optimal,125,lowpass,cosine,1,,1,,0.42882889,,-43.1745
this-paper-optimal,125,lowpass,cosine,1,,2,,0.58610912 0.09232885,,-71.4495
this-paper-optimal,125,lowpass,cosine,2,,1,,0.40857697,,-42.6543
this-paper-optimal,125,lowpass,cosine,2,,2,,0.59426799 0.10378256,,-69.1361
this-paper-optimal,125,lowpass,cosine,3,,1,,0.39860574,,-42.7619
this-paper-optimal,125,lowpass,cosine,3,,2,,0.59501273 0.10676707,,-68.1802
this-paper-optimal,125,lowpass,cosine,4,,1,,0.39260576,,-42.9386
this-paper-optimal,125,lowpass,cosine,4,,2,,0.59430428 0.10765437,,-67.7539
this-paper-optimal,125,lowpass,cosine,5,,1,,0.38858694,,-43.1040
this-paper-optimal,125,lowpass,cosine,5,,2,,0.59332380 0.10786129,,-67.5429
this-paper-optimal,125,lowpass,cosine,6,,1,,0.38570709,,-43.2458
this-paper-optimal,125,lowpass,cosine,6,,2,,0.59233791 0.10779975,,-67.4378
this-paper-optimal,125,lowpass,cosine,7,,1,,0.38354489,,-43.3651
this-paper-optimal,125,lowpass,cosine,7,,2,,0.59141564 0.10762280,,-67.3912
this-paper-optimal,125,lowpass,cosine,8,,1,,0.38186512,,-43.4654
this-paper-optimal,125,lowpass,cosine,8,,2,,0.59058157 0.10740269,,-67.3763
this-paper-optimal,125,lowpass,cosine,9,,1,,0.38052579,,-43.5502
this-paper-optimal,125,lowpass,cosine,9,,2,,0.58983726 0.10717245,,-67.3793
this-paper-optimal,125,lowpass,cosine,10,,1,,0.37943600,,-43.6222
this-paper-optimal,125,lowpass,cosine,10,,2,,0.58918663 0.10695424,,-67.3895
this-paper-optimal,125,lowpass,cosine,17,,1,,0.37536715,,-43.9153
this-paper-optimal,125,lowpass,cosine,17,,2,,0.58630307 0.10583944,,-67.5129
this-paper-optimal,125,lowpass,cosine,18,,1,,0.37506087,,-43.9386
this-paper-optimal,125,lowpass,cosine,18,,2,,0.58605675 0.10573717,,-67.5273
this-paper-optimal,125,lowpass,cosine,25,,1,,0.37379898,,-44.0346
this-paper-optimal,125,lowpass,cosine,25,,2,,0.58505507 0.10533310,,-67.5756
this-paper-optimal,125,lowpass,cosine,26,,1,,0.37371013,,-44.0409
this-paper-optimal,125,lowpass,cosine,26,,2,,0.58499681 0.10531450,,-67.5746
this-paper-optimal,125,lowpass,cosine,33,,1,,0.37355044,,-44.0441
this-paper-optimal,125,lowpass,cosine,33,,2,,0.58513092 0.10546079,,-67.4980
this-paper-optimal,125,lowpass,cosine,34,,1,,0.37359024,,-44.0388
this-paper-optimal,125,lowpass,cosine,34,,2,,0.58522697 0.10552216,,-67.4764
this-paper-optimal,125,lowpass,cosine,41,,1,,0.37437868,,-43.9517
this-paper-optimal,125,lowpass,cosine,41,,2,,0.58659845 0.10634272,,-67.2122
this-paper-optimal,125,lowpass,cosine,42,,1,,0.37458243,,-43.9302
this-paper-optimal,125,lowpass,cosine,42,,2,,0.58692664 0.10653644,,-67.1515
this-paper-optimal,125,lowpass,cosine,49,,1,,0.37716456,,-43.6598
this-paper-optimal,125,lowpass,cosine,49,,2,,0.58858197 0.10741458,,-66.9425
this-paper-optimal,125,lowpass,cosine,50,,1,,0.37788192,,-43.5734
this-paper-optimal,125,lowpass,cosine,50,,2,,0.58841452 0.10726918,,-67.0163
this-paper-optimal,125,lowpass,cosine,57,,1,,0.38896859,,-42.2362
this-paper-optimal,125,lowpass,cosine,57,,2,,0.56907375 0.09490581,,-71.3158
this-paper-optimal,125,lowpass,cosine,58,,1,,0.39085316,,-42.1477
this-paper-optimal,125,lowpass,cosine,58,,2,,0.55701876 0.08755740,,-74.0652
this-paper-optimal,125,lowpass,cosine,59,,1,,0.39058888,,-42.5980
this-paper-optimal,125,lowpass,cosine,59,,2,,0.53519213 0.07462104,,-80.5927
this-paper-optimal,125,lowpass,cosine,60,,1,,0.38371572,,-44.7342
this-paper-optimal,125,lowpass,cosine,60,,2,,0.48881227 0.04943803,,-105.9743
this-paper-optimal,125,lowpass,cosine,61,,1,,0.35262703,,-56.2177
this-paper-optimal,128,lowpass,cosine,1,,1,,0.42882545,,-43.1751
this-paper-optimal,128,lowpass,cosine,1,,2,,0.58610233 0.09232420,,-71.4510
this-paper-optimal,128,lowpass,cosine,2,,1,,0.40857069,,-42.6552
this-paper-optimal,128,lowpass,cosine,2,,2,,0.59425498 0.10377423,,-69.1383
this-paper-optimal,128,lowpass,cosine,3,,1,,0.39859672,,-42.7630
this-paper-optimal,128,lowpass,cosine,3,,2,,0.59499437 0.10675529,,-68.1844
this-paper-optimal,128,lowpass,cosine,4,,1,,0.39259404,,-42.9400
this-paper-optimal,128,lowpass,cosine,4,,2,,0.59428157 0.10764023,,-67.7585
this-paper-optimal,128,lowpass,cosine,5,,1,,0.38857250,,-43.1056
this-paper-optimal,128,lowpass,cosine,5,,2,,0.59329397 0.10784292,,-67.5489
this-paper-optimal,128,lowpass,cosine,6,,1,,0.38568991,,-43.2477
this-paper-optimal,128,lowpass,cosine,6,,2,,0.59230362 0.10777899,,-67.4444
this-paper-optimal,128,lowpass,cosine,7,,1,,0.38352493,,-43.3673
this-paper-optimal,128,lowpass,cosine,7,,2,,0.59137693 0.10759966,,-67.3984
this-paper-optimal,128,lowpass,cosine,9,,1,,0.38050009,,-43.5529
this-paper-optimal,128,lowpass,cosine,9,,2,,0.58978962 0.10714453,,-67.3877
this-paper-optimal,128,lowpass,cosine,10,,1,,0.37940731,,-43.6253
this-paper-optimal,128,lowpass,cosine,10,,2,,0.58912997 0.10692096,,-67.3998
this-paper-optimal,128,lowpass,cosine,17,,1,,0.37531423,,-43.9207
this-paper-optimal,128,lowpass,cosine,17,,2,,0.58620865 0.10578567,,-67.5289
this-paper-optimal,128,lowpass,cosine,18,,1,,0.37500381,,-43.9445
this-paper-optimal,128,lowpass,cosine,18,,2,,0.58595608 0.10567999,,-67.5443
this-paper-optimal,128,lowpass,cosine,25,,1,,0.37370488,,-44.0442
this-paper-optimal,128,lowpass,cosine,25,,2,,0.58490009 0.10524605,,-67.6013
this-paper-optimal,128,lowpass,cosine,26,,1,,0.37360915,,-44.0512
this-paper-optimal,128,lowpass,cosine,26,,2,,0.58483205 0.10522204,,-67.6019
this-paper-optimal,128,lowpass,cosine,33,,1,,0.37338174,,-44.0612
this-paper-optimal,128,lowpass,cosine,33,,2,,0.58485752 0.10530634,,-67.5441
this-paper-optimal,128,lowpass,cosine,34,,1,,0.37340785,,-44.0573
this-paper-optimal,128,lowpass,cosine,34,,2,,0.58493507 0.10535724,,-67.5255
this-paper-optimal,128,lowpass,cosine,41,,1,,0.37404482,,-43.9859
this-paper-optimal,128,lowpass,cosine,41,,2,,0.58607786 0.10604378,,-67.3023
this-paper-optimal,128,lowpass,cosine,42,,1,,0.37421438,,-43.9678
this-paper-optimal,128,lowpass,cosine,42,,2,,0.58635680 0.10620813,,-67.2506
this-paper-optimal,128,lowpass,cosine,49,,1,,0.37633406,,-43.7461
this-paper-optimal,128,lowpass,cosine,49,,2,,0.58846533 0.10739782,,-66.9157
this-paper-optimal,128,lowpass,cosine,50,,1,,0.37684112,,-43.6932
this-paper-optimal,128,lowpass,cosine,50,,2,,0.58853348 0.10740803,,-66.9314
this-paper-optimal,128,lowpass,cosine,57,,1,,0.38514506,,-42.6952
this-paper-optimal,128,lowpass,cosine,57,,2,,0.57869403 0.10084723,,-69.4578
this-paper-optimal,128,lowpass,cosine,58,,1,,0.38768746,,-42.3752
this-paper-optimal,128,lowpass,cosine,58,,2,,0.57262925 0.09708976,,-70.6070
this-paper-optimal,128,lowpass,cosine,61,,1,,0.38711124,,-43.6872
this-paper-optimal,128,lowpass,cosine,61,,2,,0.51479537 0.06297590,,-90.1565
this-paper-optimal,128,lowpass,cosine,62,,1,,0.36988304,,-49.6030
this-paper-optimal,191,lowpass,cosine,1,,1,,0.42878640,,-43.1820
this-paper-optimal,191,lowpass,cosine,1,,2,,0.58602493 0.09227127,,-71.4685
this-paper-optimal,191,lowpass,cosine,2,,1,,0.40849941,,-42.6648
this-paper-optimal,191,lowpass,cosine,2,,2,,0.59410644 0.10367916,,-69.1632
this-paper-optimal,191,lowpass,cosine,3,,1,,0.39849447,,-42.7756
this-paper-optimal,191,lowpass,cosine,3,,2,,0.59478479 0.10662086,,-68.2318
this-paper-optimal,191,lowpass,cosine,4,,1,,0.39246116,,-42.9555
this-paper-optimal,191,lowpass,cosine,4,,2,,0.59402194 0.10747861,,-67.8119
this-paper-optimal,191,lowpass,cosine,5,,1,,0.38840900,,-43.1241
this-paper-optimal,191,lowpass,cosine,5,,2,,0.59295299 0.10763310,,-67.6173
this-paper-optimal,191,lowpass,cosine,6,,1,,0.38549559,,-43.2692
this-paper-optimal,191,lowpass,cosine,6,,2,,0.59191168 0.10754180,,-67.5197
this-paper-optimal,191,lowpass,cosine,7,,1,,0.38329949,,-43.3919
this-paper-optimal,191,lowpass,cosine,7,,2,,0.59093446 0.10733544,,-67.4806
this-paper-optimal,191,lowpass,cosine,8,,1,,0.38158538,,-43.4956
this-paper-optimal,191,lowpass,cosine,8,,2,,0.59004547 0.10708600,,-67.4736
this-paper-optimal,191,lowpass,cosine,9,,1,,0.38021113,,-43.5838
this-paper-optimal,191,lowpass,cosine,9,,2,,0.58924594 0.10682631,,-67.4845
this-paper-optimal,191,lowpass,cosine,10,,1,,0.37908571,,-43.6594
this-paper-optimal,191,lowpass,cosine,10,,2,,0.58852935 0.10657170,,-67.5054
this-paper-optimal,191,lowpass,cosine,17,,1,,0.37473859,,-43.9800
this-paper-optimal,191,lowpass,cosine,17,,2,,0.58516556 0.10519414,,-67.7060
this-paper-optimal,191,lowpass,cosine,18,,1,,0.37438683,,-44.0080
this-paper-optimal,191,lowpass,cosine,18,,2,,0.58484708 0.10505272,,-67.7318
this-paper-optimal,191,lowpass,cosine,25,,1,,0.37274170,,-44.1423
this-paper-optimal,191,lowpass,cosine,25,,2,,0.58325686 0.10432828,,-67.8734
this-paper-optimal,191,lowpass,cosine,26,,1,,0.37258581,,-44.1554
this-paper-optimal,191,lowpass,cosine,26,,2,,0.58309790 0.10425459,,-67.8884
this-paper-optimal,191,lowpass,cosine,33,,1,,0.37181751,,-44.2199
this-paper-optimal,191,lowpass,cosine,33,,2,,0.58230083 0.10388454,,-67.9645
this-paper-optimal,191,lowpass,cosine,34,,1,,0.37174333,,-44.2261
this-paper-optimal,191,lowpass,cosine,34,,2,,0.58222388 0.10384913,,-67.9716
this-paper-optimal,191,lowpass,cosine,41,,1,,0.37140034,,-44.2542
this-paper-optimal,191,lowpass,cosine,41,,2,,0.58188459 0.10369859,,-67.9985
this-paper-optimal,191,lowpass,cosine,42,,1,,0.37137303,,-44.2563
this-paper-optimal,191,lowpass,cosine,42,,2,,0.58186172 0.10368980,,-67.9992
this-paper-optimal,191,lowpass,cosine,49,,1,,0.37131204,,-44.2587
this-paper-optimal,191,lowpass,cosine,49,,2,,0.58187600 0.10371852,,-67.9803
this-paper-optimal,192,lowpass,cosine,1,,1,,0.42878607,,-43.1820
this-paper-optimal,192,lowpass,cosine,1,,2,,0.58602427 0.09227082,,-71.4686
this-paper-optimal,192,lowpass,cosine,2,,1,,0.40849881,,-42.6649
this-paper-optimal,192,lowpass,cosine,2,,2,,0.59410518 0.10367835,,-69.1634
this-paper-optimal,192,lowpass,cosine,3,,1,,0.39849360,,-42.7757
this-paper-optimal,192,lowpass,cosine,3,,2,,0.59478301 0.10661972,,-68.2322
this-paper-optimal,192,lowpass,cosine,4,,1,,0.39246003,,-42.9556
this-paper-optimal,192,lowpass,cosine,4,,2,,0.59401974 0.10747724,,-67.8124
this-paper-optimal,192,lowpass,cosine,5,,1,,0.38840761,,-43.1243
this-paper-optimal,192,lowpass,cosine,5,,2,,0.59295008 0.10763131,,-67.6179
this-paper-optimal,192,lowpass,cosine,6,,1,,0.38549395,,-43.2694
this-paper-optimal,192,lowpass,cosine,6,,2,,0.59190835 0.10753978,,-67.5203
this-paper-optimal,192,lowpass,cosine,7,,1,,0.38329759,,-43.3921
this-paper-optimal,192,lowpass,cosine,7,,2,,0.59093069 0.10733319,,-67.4813
this-paper-optimal,192,lowpass,cosine,8,,1,,0.38158321,,-43.4958
this-paper-optimal,192,lowpass,cosine,8,,2,,0.59004126 0.10708352,,-67.4744
this-paper-optimal,192,lowpass,cosine,9,,1,,0.38020870,,-43.5840
this-paper-optimal,192,lowpass,cosine,9,,2,,0.58924131 0.10682360,,-67.4853
this-paper-optimal,192,lowpass,cosine,10,,1,,0.37908302,,-43.6596
this-paper-optimal,192,lowpass,cosine,10,,2,,0.58852429 0.10656877,,-67.5063
this-paper-optimal,192,lowpass,cosine,17,,1,,0.37473390,,-43.9805
this-paper-optimal,192,lowpass,cosine,17,,2,,0.58515736 0.10518954,,-67.7074
this-paper-optimal,192,lowpass,cosine,18,,1,,0.37438183,,-44.0085
this-paper-optimal,192,lowpass,cosine,18,,2,,0.58483839 0.10504786,,-67.7333
this-paper-optimal,192,lowpass,cosine,25,,1,,0.37273428,,-44.1431
this-paper-optimal,192,lowpass,cosine,25,,2,,0.58324447 0.10432144,,-67.8754
this-paper-optimal,192,lowpass,cosine,26,,1,,0.37257800,,-44.1561
this-paper-optimal,192,lowpass,cosine,26,,2,,0.58308491 0.10424744,,-67.8905
this-paper-optimal,192,lowpass,cosine,33,,1,,0.37180652,,-44.2210
this-paper-optimal,192,lowpass,cosine,33,,2,,0.58228305 0.10387482,,-67.9673
this-paper-optimal,192,lowpass,cosine,34,,1,,0.37173180,,-44.2273
this-paper-optimal,192,lowpass,cosine,34,,2,,0.58220531 0.10383898,,-67.9745
this-paper-optimal,192,lowpass,cosine,41,,1,,0.37138430,,-44.2558
this-paper-optimal,192,lowpass,cosine,41,,2,,0.58185935 0.10368485,,-68.0024
this-paper-optimal,192,lowpass,cosine,42,,1,,0.37135621,,-44.2580
this-paper-optimal,192,lowpass,cosine,42,,2,,0.58183534 0.10367545,,-68.0034
this-paper-optimal,192,lowpass,cosine,49,,1,,0.37128828,,-44.2611
this-paper-optimal,192,lowpass,cosine,49,,2,,0.58183726 0.10369724,,-67.9866
this-paper-optimal,223,lowpass,cosine,1,,1,,0.42877791,,-43.1835
this-paper-optimal,223,lowpass,cosine,1,,2,,0.58600801 0.09225971,,-71.4723
this-paper-optimal,223,lowpass,cosine,2,,1,,0.40848392,,-42.6670
this-paper-optimal,223,lowpass,cosine,2,,2,,0.59407395 0.10365837,,-69.1686
this-paper-optimal,223,lowpass,cosine,3,,1,,0.39847225,,-42.7783
this-paper-optimal,223,lowpass,cosine,3,,2,,0.59473893 0.10659147,,-68.2421
this-paper-optimal,223,lowpass,cosine,4,,1,,0.39243230,,-42.9589
this-paper-optimal,223,lowpass,cosine,4,,2,,0.59396509 0.10744324,,-67.8236
this-paper-optimal,223,lowpass,cosine,5,,1,,0.38837354,,-43.1282
this-paper-optimal,223,lowpass,cosine,5,,2,,0.59287830 0.10758718,,-67.6323
this-paper-optimal,223,lowpass,cosine,6,,1,,0.38545351,,-43.2739
this-paper-optimal,223,lowpass,cosine,6,,2,,0.59182585 0.10748991,,-67.5362
this-paper-optimal,223,lowpass,cosine,7,,1,,0.38325077,,-43.3972
this-paper-optimal,223,lowpass,cosine,7,,2,,0.59083756 0.10727764,,-67.4987
this-paper-optimal,223,lowpass,cosine,9,,1,,0.38014898,,-43.5904
this-paper-optimal,223,lowpass,cosine,9,,2,,0.58912711 0.10675686,,-67.5056
this-paper-optimal,223,lowpass,cosine,10,,1,,0.37901676,,-43.6667
this-paper-optimal,223,lowpass,cosine,10,,2,,0.58839952 0.10649642,,-67.5282
this-paper-optimal,223,lowpass,cosine,11,,1,,0.37807223,,-43.7327
this-paper-optimal,223,lowpass,cosine,11,,2,,0.58774617 0.10624810,,-67.5562
this-paper-optimal,223,lowpass,cosine,17,,1,,0.37461923,,-43.9923
this-paper-optimal,223,lowpass,cosine,17,,2,,0.58495578 0.10507650,,-67.7407
this-paper-optimal,223,lowpass,cosine,18,,1,,0.37425975,,-44.0210
this-paper-optimal,223,lowpass,cosine,18,,2,,0.58462519 0.10492866,,-67.7684
this-paper-optimal,223,lowpass,cosine,33,,1,,0.37154544,,-44.2474
this-paper-optimal,223,lowpass,cosine,33,,2,,0.58185668 0.10364206,,-68.0350
this-paper-optimal,223,lowpass,cosine,34,,1,,0.37145877,,-44.2549
this-paper-optimal,223,lowpass,cosine,34,,2,,0.58176084 0.10359652,,-68.0450
this-paper-optimal,223,lowpass,cosine,49,,1,,0.37075574,,-44.3147
this-paper-optimal,223,lowpass,cosine,49,,2,,0.58099928 0.10324188,,-68.1191
this-paper-optimal,223,lowpass,cosine,50,,1,,0.37073857,,-44.3161
this-paper-optimal,223,lowpass,cosine,50,,2,,0.58098449 0.10323613,,-68.1196
this-paper-optimal,223,lowpass,cosine,57,,1,,0.37070011,,-44.3176
this-paper-optimal,223,lowpass,cosine,57,,2,,0.58098818 0.10325091,,-68.1089
this-paper-optimal,224,lowpass,cosine,1,,1,,0.42877770,,-43.1835
this-paper-optimal,224,lowpass,cosine,1,,2,,0.58600760 0.09225942,,-71.4724
this-paper-optimal,224,lowpass,cosine,2,,1,,0.40848354,,-42.6670
this-paper-optimal,224,lowpass,cosine,2,,2,,0.59407315 0.10365786,,-69.1688
this-paper-optimal,224,lowpass,cosine,3,,1,,0.39847171,,-42.7784
this-paper-optimal,224,lowpass,cosine,3,,2,,0.59473780 0.10659075,,-68.2424
this-paper-optimal,224,lowpass,cosine,4,,1,,0.39243159,,-42.9590
this-paper-optimal,224,lowpass,cosine,4,,2,,0.59396370 0.10744238,,-67.8239
this-paper-optimal,224,lowpass,cosine,5,,1,,0.38837267,,-43.1283
this-paper-optimal,224,lowpass,cosine,5,,2,,0.59287646 0.10758605,,-67.6326
this-paper-optimal,224,lowpass,cosine,6,,1,,0.38545248,,-43.2740
this-paper-optimal,224,lowpass,cosine,6,,2,,0.59182373 0.10748863,,-67.5366
this-paper-optimal,224,lowpass,cosine,7,,1,,0.38324958,,-43.3973
this-paper-optimal,224,lowpass,cosine,7,,2,,0.59083518 0.10727622,,-67.4991
this-paper-optimal,224,lowpass,cosine,9,,1,,0.38014745,,-43.5905
this-paper-optimal,224,lowpass,cosine,9,,2,,0.58912419 0.10675515,,-67.5062
this-paper-optimal,224,lowpass,cosine,10,,1,,0.37901508,,-43.6668
this-paper-optimal,224,lowpass,cosine,10,,2,,0.58839633 0.10649457,,-67.5287
this-paper-optimal,224,lowpass,cosine,11,,1,,0.37807038,,-43.7329
this-paper-optimal,224,lowpass,cosine,11,,2,,0.58774272 0.10624611,,-67.5568
this-paper-optimal,224,lowpass,cosine,17,,1,,0.37461632,,-43.9926
this-paper-optimal,224,lowpass,cosine,17,,2,,0.58495065 0.10507363,,-67.7416
this-paper-optimal,224,lowpass,cosine,18,,1,,0.37425667,,-44.0214
this-paper-optimal,224,lowpass,cosine,18,,2,,0.58461977 0.10492563,,-67.7693
this-paper-optimal,224,lowpass,cosine,33,,1,,0.37153901,,-44.2481
this-paper-optimal,224,lowpass,cosine,33,,2,,0.58184609 0.10363628,,-68.0367
this-paper-optimal,224,lowpass,cosine,34,,1,,0.37145206,,-44.2556
this-paper-optimal,224,lowpass,cosine,34,,2,,0.58174982 0.10359052,,-68.0468
this-paper-optimal,224,lowpass,cosine,49,,1,,0.37074336,,-44.3160
this-paper-optimal,224,lowpass,cosine,49,,2,,0.58097969 0.10323128,,-68.1222
this-paper-optimal,224,lowpass,cosine,50,,1,,0.37072566,,-44.3174
this-paper-optimal,224,lowpass,cosine,50,,2,,0.58096411 0.10322511,,-68.1228
this-paper-optimal,224,lowpass,cosine,57,,1,,0.37068273,,-44.3194
this-paper-optimal,224,lowpass,cosine,57,,2,,0.58096119 0.10323631,,-68.1131
this-paper-optimal,255,lowpass,cosine,1,,1,,0.42877241,,-43.1844
this-paper-optimal,255,lowpass,cosine,1,,2,,0.58599705 0.09225221,,-71.4748
this-paper-optimal,255,lowpass,cosine,2,,1,,0.40847388,,-42.6683
this-paper-optimal,255,lowpass,cosine,2,,2,,0.59405285 0.10364488,,-69.1722
this-paper-optimal,255,lowpass,cosine,3,,1,,0.39845786,,-42.7801
this-paper-optimal,255,lowpass,cosine,3,,2,,0.59470916 0.10657239,,-68.2489
this-paper-optimal,255,lowpass,cosine,4,,1,,0.39241361,,-42.9611
this-paper-optimal,255,lowpass,cosine,4,,2,,0.59392817 0.10742028,,-67.8313
this-paper-optimal,255,lowpass,cosine,5,,1,,0.38835058,,-43.1308
this-paper-optimal,255,lowpass,cosine,5,,2,,0.59283271 0.10755934,,-67.6412
this-paper-optimal,255,lowpass,cosine,6,,1,,0.38542628,,-43.2769
this-paper-optimal,255,lowpass,cosine,6,,2,,0.59177009 0.10745621,,-67.5469
this-paper-optimal,255,lowpass,cosine,7,,1,,0.38321926,,-43.4006
this-paper-optimal,255,lowpass,cosine,7,,2,,0.59077465 0.10724013,,-67.5104
this-paper-optimal,255,lowpass,cosine,9,,1,,0.38010883,,-43.5947
this-paper-optimal,255,lowpass,cosine,9,,2,,0.58905001 0.10671182,,-67.5194
this-paper-optimal,255,lowpass,cosine,10,,1,,0.37897227,,-43.6714
this-paper-optimal,255,lowpass,cosine,10,,2,,0.58831532 0.10644762,,-67.5429
this-paper-optimal,255,lowpass,cosine,11,,1,,0.37802334,,-43.7378
this-paper-optimal,255,lowpass,cosine,11,,2,,0.58765486 0.10619554,,-67.5720
this-paper-optimal,255,lowpass,cosine,17,,1,,0.37454294,,-44.0002
this-paper-optimal,255,lowpass,cosine,17,,2,,0.58482064 0.10500078,,-67.7631
this-paper-optimal,255,lowpass,cosine,18,,1,,0.37417868,,-44.0294
this-paper-optimal,255,lowpass,cosine,18,,2,,0.58448246 0.10484893,,-67.7919
this-paper-optimal,255,lowpass,cosine,33,,1,,0.37137943,,-44.2642
this-paper-optimal,255,lowpass,cosine,33,,2,,0.58158144 0.10349208,,-68.0788
this-paper-optimal,255,lowpass,cosine,34,,1,,0.37128587,,-44.2724
this-paper-optimal,255,lowpass,cosine,34,,2,,0.58147502 0.10344091,,-68.0904
this-paper-optimal,255,lowpass,cosine,49,,1,,0.37044644,,-44.3458
this-paper-optimal,255,lowpass,cosine,49,,2,,0.58050553 0.10297512,,-68.1966
this-paper-optimal,255,lowpass,cosine,50,,1,,0.37041711,,-44.3484
this-paper-optimal,255,lowpass,cosine,50,,2,,0.58047240 0.10295953,,-68.2000
this-paper-optimal,255,lowpass,cosine,57,,1,,0.37027690,,-44.3601
this-paper-optimal,255,lowpass,cosine,57,,2,,0.58032355 0.10289221,,-68.2130
this-paper-optimal,255,lowpass,cosine,58,,1,,0.37026540,,-44.3610
this-paper-optimal,255,lowpass,cosine,58,,2,,0.58031343 0.10288825,,-68.2134
this-paper-optimal,255,lowpass,cosine,65,,1,,0.37023960,,-44.3621
this-paper-optimal,255,lowpass,cosine,65,,2,,0.58031665 0.10289865,,-68.2059
this-paper-optimal,256,lowpass,cosine,1,,1,,0.42877227,,-43.1845
this-paper-optimal,256,lowpass,cosine,1,,2,,0.58599677 0.09225202,,-71.4748
this-paper-optimal,256,lowpass,cosine,2,,1,,0.40847363,,-42.6684
this-paper-optimal,256,lowpass,cosine,2,,2,,0.59405232 0.10364454,,-69.1723
this-paper-optimal,256,lowpass,cosine,3,,1,,0.39845749,,-42.7801
this-paper-optimal,256,lowpass,cosine,3,,2,,0.59470841 0.10657190,,-68.2490
this-paper-optimal,256,lowpass,cosine,4,,1,,0.39241314,,-42.9611
this-paper-optimal,256,lowpass,cosine,4,,2,,0.59392723 0.10741970,,-67.8315
this-paper-optimal,256,lowpass,cosine,5,,1,,0.38834999,,-43.1308
this-paper-optimal,256,lowpass,cosine,5,,2,,0.59283160 0.10755866,,-67.6415
this-paper-optimal,256,lowpass,cosine,6,,1,,0.38542559,,-43.2770
this-paper-optimal,256,lowpass,cosine,6,,2,,0.59176868 0.10745536,,-67.5472
this-paper-optimal,256,lowpass,cosine,7,,1,,0.38321846,,-43.4007
this-paper-optimal,256,lowpass,cosine,7,,2,,0.59077306 0.10723918,,-67.5107
this-paper-optimal,256,lowpass,cosine,9,,1,,0.38010781,,-43.5948
this-paper-optimal,256,lowpass,cosine,9,,2,,0.58904806 0.10671067,,-67.5197
this-paper-optimal,256,lowpass,cosine,10,,1,,0.37897115,,-43.6715
this-paper-optimal,256,lowpass,cosine,10,,2,,0.58831319 0.10644638,,-67.5433
this-paper-optimal,256,lowpass,cosine,11,,1,,0.37802211,,-43.7379
this-paper-optimal,256,lowpass,cosine,11,,2,,0.58765255 0.10619421,,-67.5724
this-paper-optimal,256,lowpass,cosine,16,,1,,0.37494926,,-43.9681
this-paper-optimal,256,lowpass,cosine,16,,2,,0.58518629 0.10516271,,-67.7336
this-paper-optimal,256,lowpass,cosine,17,,1,,0.37454101,,-44.0004
this-paper-optimal,256,lowpass,cosine,17,,2,,0.58481722 0.10499887,,-67.7637
this-paper-optimal,256,lowpass,cosine,18,,1,,0.37417664,,-44.0296
this-paper-optimal,256,lowpass,cosine,18,,2,,0.58447886 0.10484692,,-67.7925
this-paper-optimal,256,lowpass,cosine,32,,1,,0.37147591,,-44.2559
this-paper-optimal,256,lowpass,cosine,32,,2,,0.58168845 0.10354302,,-68.0674
this-paper-optimal,256,lowpass,cosine,33,,1,,0.37137532,,-44.2646
this-paper-optimal,256,lowpass,cosine,33,,2,,0.58157459 0.10348834,,-68.0799
this-paper-optimal,256,lowpass,cosine,34,,1,,0.37128160,,-44.2728
this-paper-optimal,256,lowpass,cosine,34,,2,,0.58146791 0.10343705,,-68.0915
this-paper-optimal,256,lowpass,cosine,48,,1,,0.37047121,,-44.3438
this-paper-optimal,256,lowpass,cosine,48,,2,,0.58053036 0.10298610,,-68.1947
this-paper-optimal,256,lowpass,cosine,49,,1,,0.37043905,,-44.3466
this-paper-optimal,256,lowpass,cosine,49,,2,,0.58049363 0.10296869,,-68.1985
this-paper-optimal,256,lowpass,cosine,50,,1,,0.37040946,,-44.3491
this-paper-optimal,256,lowpass,cosine,50,,2,,0.58046009 0.10295289,,-68.2020
this-paper-optimal,256,lowpass,cosine,56,,1,,0.37028095,,-44.3600
this-paper-optimal,256,lowpass,cosine,56,,2,,0.58032126 0.10288941,,-68.2146
this-paper-optimal,256,lowpass,cosine,57,,1,,0.37026706,,-44.3611
this-paper-optimal,256,lowpass,cosine,57,,2,,0.58030791 0.10288379,,-68.2155
this-paper-optimal,256,lowpass,cosine,58,,1,,0.37025520,,-44.3621
this-paper-optimal,256,lowpass,cosine,58,,2,,0.58029725 0.10287954,,-68.2159
this-paper-optimal,256,lowpass,cosine,64,,1,,0.37022477,,-44.3638
this-paper-optimal,256,lowpass,cosine,64,,2,,0.58028825 0.10288229,,-68.2112
this-paper-optimal,256,lowpass,cosine,65,,1,,0.37022635,,-44.3634
this-paper-optimal,256,lowpass,cosine,65,,2,,0.58029588 0.10288747,,-68.2092
this-paper-optimal,256,lowpass,cosine,80,,1,,0.37049425,,-44.3344
this-paper-optimal,256,lowpass,cosine,80,,2,,0.58075492 0.10314678,,-68.1278
this-paper-optimal,256,lowpass,cosine,96,,1,,0.37154545,,-44.2272
this-paper-optimal,256,lowpass,cosine,96,,2,,0.58240123 0.10405528,,-67.8563
this-paper-optimal,256,lowpass,cosine,104,,1,,0.37274638,,-44.1049
this-paper-optimal,256,lowpass,cosine,104,,2,,0.58423635 0.10508091,,-67.5498
this-paper-optimal,256,lowpass,cosine,112,,1,,0.37520890,,-43.8524
this-paper-optimal,256,lowpass,cosine,112,,2,,0.58737757 0.10685202,,-67.0336
this-paper-optimal,256,lowpass,cosine,120,,1,,0.38283949,,-42.9637
this-paper-optimal,256,lowpass,cosine,120,,2,,0.58224932 0.10315606,,-68.6969
this-paper-optimal,256,lowpass,cosine,121,,1,,0.38484675,,-42.7218
this-paper-optimal,256,lowpass,cosine,121,,2,,0.57838626 0.10071361,,-69.4795
this-paper-optimal,256,lowpass,cosine,122,,1,,0.38743961,,-42.3958
this-paper-optimal,256,lowpass,cosine,122,,2,,0.57237114 0.09698313,,-70.6244
this-paper-optimal,256,lowpass,cosine,123,,1,,0.38972061,,-42.1966
this-paper-optimal,256,lowpass,cosine,123,,2,,0.56272391 0.09104805,,-72.7043
this-paper-optimal,256,lowpass,cosine,124,,1,,0.39056144,,-42.3803
this-paper-optimal,256,lowpass,cosine,124,,2,,0.54616295 0.08103137,,-77.1718
this-paper-optimal,256,lowpass,cosine,125,,1,,0.38700274,,-43.6934
this-paper-optimal,256,lowpass,cosine,125,,2,,0.51467241 0.06294377,,-90.1628
this-paper-optimal,256,lowpass,cosine,126,,1,,0.36981278,,-49.6064
)FSF";

constexpr std::string_view kLpfCos3t = R"FSF(source,n,kind,expansion,bw,m1,t,binding,coeffs,claimed_psl_db,corrected_psl_db
this-paper-optimal,15,lowpass,cosine,1,,3,,0.65808756 0.17066723 0.01131839,,-105.7660
this-paper-optimal,15,lowpass,cosine,2,,3,,0.66634773 0.18168815 0.01170023,,-109.4107
this-paper-optimal,15,lowpass,cosine,3,,3,,0.64705158 0.16383941 0.00867161,,-120.7542
this-paper-optimal,15,lowpass,cosine,4,,3,,0.60158573 0.12372784 0.00376140,,-160.1316
this-paper-optimal,16,lowpass,cosine,1,,3,,0.66076794 0.17374123 0.01187985,,-104.2813
this-paper-optimal,16,lowpass,cosine,2,,3,,0.67271874 0.18866558 0.01294020,,-105.9922
this-paper-optimal,16,lowpass,cosine,3,,3,,0.65858311 0.17537216 0.01039969,,-115.0748
this-paper-optimal,16,lowpass,cosine,4,,3,,0.62676044 0.14601962 0.00625291,,-134.4857
this-paper-optimal,23,lowpass,cosine,1,,3,,0.67060572 0.18525334 0.01408280,,-99.4045
this-paper-optimal,23,lowpass,cosine,2,,3,,0.69418387 0.21314065 0.01768526,,-96.8845
this-paper-optimal,23,lowpass,cosine,3,,3,,0.69768235 0.21809635 0.01826579,,-96.9844
this-paper-optimal,23,lowpass,cosine,4,,3,,0.69377384 0.21454407 0.01747887,,-98.3846
this-paper-optimal,24,lowpass,cosine,1,,3,,0.67121063 0.18598120 0.01423144,,-99.0821
this-paper-optimal,24,lowpass,cosine,2,,3,,0.69547934 0.21468302 0.01801263,,-96.3422
this-paper-optimal,24,lowpass,cosine,3,,3,,0.69959240 0.22027298 0.01870194,,-96.4121
this-paper-optimal,24,lowpass,cosine,4,,3,,0.69683000 0.21795421 0.01814887,,-97.4356
this-paper-optimal,32,lowpass,cosine,1,,3,,0.67386181 0.18918745 0.01489295,,-97.7303
this-paper-optimal,32,lowpass,cosine,2,,3,,0.70132353 0.22170177 0.01952639,,-94.0845
this-paper-optimal,32,lowpass,cosine,4,,3,,0.71146900 0.23489059 0.02171823,,-92.6983
this-paper-optimal,32,lowpass,cosine,6,,3,,0.70747536 0.23112068 0.02087643,,-93.9350
this-paper-optimal,32,lowpass,cosine,8,,3,,0.69619661 0.21908212 0.01845796,,-97.0996
this-paper-optimal,32,lowpass,cosine,10,,3,,0.67336191 0.19510863 0.01398565,,-104.7797
this-paper-optimal,32,lowpass,cosine,12,,3,,0.61863269 0.14269239 0.00608283,,-134.7379
this-paper-optimal,33,lowpass,cosine,1,,3,,0.67400938 0.18936690 0.01493037,,-97.6574
this-paper-optimal,33,lowpass,cosine,2,,3,,0.70168667 0.22214077 0.01962217,,-93.9545
this-paper-optimal,33,lowpass,cosine,4,,3,,0.71243092 0.23602936 0.02196844,,-92.4071
this-paper-optimal,33,lowpass,cosine,6,,3,,0.70945119 0.23341201 0.02137155,,-93.3114
this-paper-optimal,33,lowpass,cosine,8,,3,,0.69966784 0.22290377 0.01921459,,-96.1254
this-paper-optimal,33,lowpass,cosine,10,,3,,0.68134951 0.20356443 0.01554946,,-101.5254
this-paper-optimal,33,lowpass,cosine,12,,3,,0.63864609 0.16111150 0.00855963,,-120.8072
this-paper-optimal,33,lowpass,cosine,13,,3,,0.59224305 0.12027366 0.00363254,,-160.4186
this-paper-optimal,47,lowpass,cosine,1,,3,,0.67429039 0.18972029 0.01500822,,-97.4916
this-paper-optimal,47,lowpass,cosine,2,,3,,0.70325156 0.22404825 0.02004349,,-93.3899
this-paper-optimal,47,lowpass,cosine,4,,3,,0.71765479 0.24224749 0.02334621,,-90.9228
this-paper-optimal,47,lowpass,cosine,6,,3,,0.72010187 0.24586297 0.02409823,,-90.3818
this-paper-optimal,47,lowpass,cosine,8,,3,,0.71914388 0.24521727 0.02398430,,-90.5147
this-paper-optimal,47,lowpass,cosine,10,,3,,0.71624160 0.24219038 0.02336043,,-91.1055
this-paper-optimal,47,lowpass,cosine,12,,3,,0.71130565 0.23678176 0.02222681,,-92.2619
this-paper-optimal,48,lowpass,cosine,1,,3,,0.67425080 0.18967326 0.01499881,,-97.5081
this-paper-optimal,48,lowpass,cosine,2,,3,,0.70324393 0.22404043 0.02004223,,-93.3904
this-paper-optimal,48,lowpass,cosine,4,,3,,0.71775834 0.24237246 0.02337442,,-90.8937
this-paper-optimal,48,lowpass,cosine,6,,3,,0.72035598 0.24616326 0.02416503,,-90.3184
this-paper-optimal,48,lowpass,cosine,8,,3,,0.71960253 0.24575218 0.02410202,,-90.4032
this-paper-optimal,48,lowpass,cosine,10,,3,,0.71700090 0.24306647 0.02355115,,-90.9173
this-paper-optimal,64,lowpass,cosine,1,,3,,0.67360765 0.18890637 0.01484429,,-97.7874
this-paper-optimal,64,lowpass,cosine,2,,3,,0.70253066 0.22319882 0.01986498,,-93.6035
this-paper-optimal,64,lowpass,cosine,3,,3,,0.71303868 0.23628288 0.02219379,,-91.7808
this-paper-optimal,64,lowpass,cosine,4,,3,,0.71798108 0.24266495 0.02344703,,-90.8083
this-paper-optimal,64,lowpass,cosine,6,,3,,0.72197640 0.24809912 0.02460152,,-89.9048
this-paper-optimal,64,lowpass,cosine,8,,3,,0.72302793 0.24977515 0.02499554,,-89.5850
this-paper-optimal,64,lowpass,cosine,12,,3,,0.72201460 0.24910567 0.02490711,,-89.6397
this-paper-optimal,64,lowpass,cosine,16,,3,,0.71845816 0.24529725 0.02412045,,-90.3072
this-paper-optimal,64,lowpass,cosine,20,,3,,0.71094774 0.23692669 0.02234878,,-92.0305
this-paper-optimal,64,lowpass,cosine,24,,3,,0.69216577 0.21622234 0.01810781,,-97.3172
this-paper-optimal,64,lowpass,cosine,28,,3,,0.61606211 0.14136891 0.00600174,,-134.8786
this-paper-optimal,65,lowpass,cosine,1,,3,,0.67357980 0.18887321 0.01483762,,-97.7995
this-paper-optimal,65,lowpass,cosine,2,,3,,0.70248432 0.22314388 0.01985333,,-93.6179
this-paper-optimal,65,lowpass,cosine,3,,3,,0.71297655 0.23620979 0.02217803,,-91.7972
this-paper-optimal,65,lowpass,cosine,4,,3,,0.71793747 0.24261464 0.02343631,,-90.8182
this-paper-optimal,65,lowpass,cosine,5,,3,,0.72054813 0.24610558 0.02416551,,-90.2486
this-paper-optimal,65,lowpass,cosine,6,,3,,0.72198035 0.24810562 0.02460345,,-89.9024
this-paper-optimal,65,lowpass,cosine,8,,3,,0.72309071 0.24985042 0.02501267,,-89.5694
this-paper-optimal,65,lowpass,cosine,12,,3,,0.72224458 0.24937324 0.02496619,,-89.5880
this-paper-optimal,65,lowpass,cosine,16,,3,,0.71900140 0.24592140 0.02425643,,-90.1823
this-paper-optimal,65,lowpass,cosine,20,,3,,0.71225704 0.23841457 0.02266816,,-91.6919
this-paper-optimal,65,lowpass,cosine,24,,3,,0.69577084 0.22011414 0.01886715,,-96.3301
this-paper-optimal,65,lowpass,cosine,28,,3,,0.63600170 0.15959056 0.00844111,,-120.9602
this-paper-optimal,65,lowpass,cosine,29,,3,,0.59011254 0.11933021 0.00359266,,-160.5332
this-paper-optimal,95,lowpass,cosine,1,,3,,0.67312479 0.18833249 0.01472935,,-97.9976
this-paper-optimal,95,lowpass,cosine,2,,3,,0.70168539 0.22219891 0.01965358,,-93.8662
this-paper-optimal,95,lowpass,cosine,3,,3,,0.71185004 0.23488792 0.02189416,,-92.0960
this-paper-optimal,95,lowpass,cosine,4,,3,,0.71659066 0.24104750 0.02309862,,-91.1416
this-paper-optimal,95,lowpass,cosine,8,,3,,0.72226864 0.24894410 0.02482617,,-89.7136
this-paper-optimal,95,lowpass,cosine,12,,3,,0.72341801 0.25078917 0.02529125,,-89.2922
this-paper-optimal,95,lowpass,cosine,16,,3,,0.72342333 0.25105749 0.02538982,,-89.1824
this-paper-optimal,95,lowpass,cosine,20,,3,,0.72286149 0.25056632 0.02530846,,-89.2287
this-paper-optimal,96,lowpass,cosine,1,,3,,0.67311646 0.18832261 0.01472738,,-98.0013
this-paper-optimal,96,lowpass,cosine,2,,3,,0.70167067 0.22218155 0.01964992,,-93.8708
this-paper-optimal,96,lowpass,cosine,3,,3,,0.71182889 0.23486317 0.02188887,,-92.1016
this-paper-optimal,96,lowpass,cosine,4,,3,,0.71656477 0.24101748 0.02309218,,-91.1478
this-paper-optimal,96,lowpass,cosine,8,,3,,0.72221922 0.24888786 0.02481413,,-89.7237
this-paper-optimal,96,lowpass,cosine,12,,3,,0.72337294 0.25073894 0.02528068,,-89.3005
this-paper-optimal,96,lowpass,cosine,16,,3,,0.72341270 0.25104736 0.02538811,,-89.1832
this-paper-optimal,96,lowpass,cosine,20,,3,,0.72290006 0.25061273 0.02531910,,-89.2192
this-paper-optimal,125,lowpass,cosine,1,,3,,0.67295115 0.18812651 0.01468824,,-98.0734
this-paper-optimal,125,lowpass,cosine,2,,3,,0.70138486 0.22184463 0.01957908,,-93.9595
this-paper-optimal,125,lowpass,cosine,4,,3,,0.71605236 0.24042404 0.02296513,,-91.2711
this-paper-optimal,125,lowpass,cosine,6,,3,,0.71988911 0.24571649 0.02409301,,-90.3451
this-paper-optimal,125,lowpass,cosine,8,,3,,0.72125889 0.24779827 0.02458158,,-89.9200
this-paper-optimal,125,lowpass,cosine,16,,3,,0.72217832 0.24968321 0.02510313,,-89.4048
this-paper-optimal,125,lowpass,cosine,24,,3,,0.72229694 0.25008558 0.02523680,,-89.2535
this-paper-optimal,125,lowpass,cosine,32,,3,,0.72192726 0.24977299 0.02518867,,-89.2756
this-paper-optimal,125,lowpass,cosine,40,,3,,0.72029068 0.24795479 0.02480279,,-89.5928
this-paper-optimal,125,lowpass,cosine,48,,3,,0.71405806 0.24090042 0.02328588,,-90.9697
this-paper-optimal,125,lowpass,cosine,56,,3,,0.67688666 0.20039151 0.01517770,,-101.8224
this-paper-optimal,125,lowpass,cosine,57,,3,,0.66051849 0.18357065 0.01218912,,-108.6798
this-paper-optimal,125,lowpass,cosine,58,,3,,0.63529667 0.15917254 0.00840777,,-121.0047
this-paper-optimal,125,lowpass,cosine,59,,3,,0.58956055 0.11908128 0.00358208,,-160.5959
this-paper-optimal,128,lowpass,cosine,1,,3,,0.67293989 0.18811316 0.01468557,,-98.0783
this-paper-optimal,128,lowpass,cosine,2,,3,,0.70136639 0.22182290 0.01957452,,-93.9652
this-paper-optimal,128,lowpass,cosine,3,,3,,0.71140195 0.23436463 0.02178255,,-92.2145
this-paper-optimal,128,lowpass,cosine,5,,3,,0.71844987 0.24368809 0.02364659,,-90.7185
this-paper-optimal,128,lowpass,cosine,8,,3,,0.72119431 0.24772521 0.02456605,,-89.9331
this-paper-optimal,128,lowpass,cosine,16,,3,,0.72205336 0.24954418 0.02507386,,-89.4282
this-paper-optimal,128,lowpass,cosine,24,,3,,0.72216316 0.24993914 0.02520646,,-89.2768
this-paper-optimal,128,lowpass,cosine,32,,3,,0.72194061 0.24979563 0.02519528,,-89.2680
this-paper-optimal,128,lowpass,cosine,40,,3,,0.72069162 0.24841849 0.02490483,,-89.5041
this-paper-optimal,128,lowpass,cosine,48,,3,,0.71591392 0.24300861 0.02373999,,-90.5362
this-paper-optimal,128,lowpass,cosine,56,,3,,0.69087553 0.21518451 0.01796460,,-97.4240
this-paper-optimal,128,lowpass,cosine,60,,3,,0.61539405 0.14101574 0.00597972,,-134.9205
this-paper-optimal,191,lowpass,cosine,1,,3,,0.67281741 0.18796807 0.01465670,,-98.1316
this-paper-optimal,191,lowpass,cosine,2,,3,,0.70115229 0.22157100 0.01952171,,-94.0316
this-paper-optimal,191,lowpass,cosine,4,,3,,0.71562961 0.23993579 0.02286098,,-91.3727
this-paper-optimal,191,lowpass,cosine,6,,3,,0.71928357 0.24502654 0.02394611,,-90.4758
this-paper-optimal,191,lowpass,cosine,8,,3,,0.72047523 0.24691382 0.02439406,,-90.0794
this-paper-optimal,191,lowpass,cosine,16,,3,,0.72066828 0.24801046 0.02475272,,-89.6863
this-paper-optimal,191,lowpass,cosine,24,,3,,0.72005292 0.24761885 0.02472321,,-89.6597
this-paper-optimal,191,lowpass,cosine,32,,3,,0.71967154 0.24733243 0.02468923,,-89.6606
this-paper-optimal,191,lowpass,cosine,40,,3,,0.71958056 0.24730375 0.02469737,,-89.6389
this-paper-optimal,191,lowpass,cosine,48,,3,,0.71979807 0.24758297 0.02476361,,-89.5768
this-paper-optimal,192,lowpass,cosine,1,,3,,0.67281640 0.18796688 0.01465646,,-98.1320
this-paper-optimal,192,lowpass,cosine,2,,3,,0.70115044 0.22156883 0.01952125,,-94.0321
this-paper-optimal,192,lowpass,cosine,4,,3,,0.71562635 0.23993203 0.02286018,,-91.3735
this-paper-optimal,192,lowpass,cosine,6,,3,,0.71927880 0.24502111 0.02394496,,-90.4768
this-paper-optimal,192,lowpass,cosine,8,,3,,0.72046916 0.24690699 0.02439262,,-90.0807
this-paper-optimal,192,lowpass,cosine,16,,3,,0.72065682 0.24799783 0.02475009,,-89.6884
this-paper-optimal,192,lowpass,cosine,24,,3,,0.72003549 0.24759980 0.02471927,,-89.6628
this-paper-optimal,192,lowpass,cosine,32,,3,,0.71964754 0.24730633 0.02468385,,-89.6649
this-paper-optimal,192,lowpass,cosine,40,,3,,0.71954705 0.24726732 0.02468987,,-89.6449
this-paper-optimal,192,lowpass,cosine,48,,3,,0.71975117 0.24753193 0.02475308,,-89.5852
this-paper-optimal,223,lowpass,cosine,1,,3,,0.67279158 0.18793751 0.01465062,,-98.1427
this-paper-optimal,223,lowpass,cosine,2,,3,,0.70110470 0.22151502 0.01950998,,-94.0463
this-paper-optimal,223,lowpass,cosine,3,,3,,0.71103593 0.23393834 0.02169198,,-92.3111
this-paper-optimal,223,lowpass,cosine,5,,3,,0.71787435 0.24302860 0.02350604,,-90.8482
this-paper-optimal,223,lowpass,cosine,8,,3,,0.72031826 0.24673713 0.02435672,,-90.1113
this-paper-optimal,223,lowpass,cosine,9,,3,,0.72054726 0.24718540 0.02447451,,-89.9990
this-paper-optimal,223,lowpass,cosine,16,,3,,0.72037316 0.24768531 0.02468504,,-89.7411
this-paper-optimal,223,lowpass,cosine,32,,3,,0.71906752 0.24667654 0.02455443,,-89.7681
this-paper-optimal,223,lowpass,cosine,48,,3,,0.71867886 0.24636960 0.02451441,,-89.7750
this-paper-optimal,223,lowpass,cosine,56,,3,,0.71881306 0.24654239 0.02455549,,-89.7358
this-paper-optimal,224,lowpass,cosine,1,,3,,0.67279095 0.18793677 0.01465048,,-98.1430
this-paper-optimal,224,lowpass,cosine,2,,3,,0.70110354 0.22151366 0.01950969,,-94.0467
this-paper-optimal,224,lowpass,cosine,3,,3,,0.71103432 0.23393647 0.02169158,,-92.3115
this-paper-optimal,224,lowpass,cosine,5,,3,,0.71787180 0.24302568 0.02350541,,-90.8488
this-paper-optimal,224,lowpass,cosine,8,,3,,0.72031438 0.24673275 0.02435580,,-90.1121
this-paper-optimal,224,lowpass,cosine,9,,3,,0.72054307 0.24718071 0.02447352,,-89.9998
this-paper-optimal,224,lowpass,cosine,16,,3,,0.72036616 0.24767761 0.02468344,,-89.7423
this-paper-optimal,224,lowpass,cosine,32,,3,,0.71905341 0.24666125 0.02455130,,-89.7706
this-paper-optimal,224,lowpass,cosine,48,,3,,0.71865354 0.24634225 0.02450882,,-89.7795
this-paper-optimal,255,lowpass,cosine,1,,3,,0.67277477 0.18791762 0.01464667,,-98.1500
this-paper-optimal,255,lowpass,cosine,2,,3,,0.70107368 0.22147855 0.01950234,,-94.0560
this-paper-optimal,255,lowpass,cosine,3,,3,,0.71099309 0.23388849 0.02168140,,-92.3225
this-paper-optimal,255,lowpass,cosine,5,,3,,0.71780682 0.24295133 0.02348960,,-90.8635
this-paper-optimal,255,lowpass,cosine,8,,3,,0.72021519 0.24662113 0.02433222,,-90.1323
this-paper-optimal,255,lowpass,cosine,9,,3,,0.72043606 0.24706089 0.02444830,,-90.0211
this-paper-optimal,255,lowpass,cosine,16,,3,,0.72018702 0.24748066 0.02464255,,-89.7755
this-paper-optimal,255,lowpass,cosine,32,,3,,0.71869412 0.24627244 0.02447171,,-89.8343
this-paper-optimal,255,lowpass,cosine,48,,3,,0.71803624 0.24567725 0.02437324,,-89.8879
this-paper-optimal,255,lowpass,cosine,56,,3,,0.71796685 0.24563059 0.02436949,,-89.8843
this-paper-optimal,255,lowpass,cosine,64,,3,,0.71805531 0.24574480 0.02439668,,-89.8580
this-paper-optimal,256,lowpass,cosine,1,,3,,0.67277435 0.18791713 0.01464658,,-98.1502
this-paper-optimal,256,lowpass,cosine,2,,3,,0.70107289 0.22147762 0.01950214,,-94.0562
this-paper-optimal,256,lowpass,cosine,3,,3,,0.71099200 0.23388722 0.02168113,,-92.3227
this-paper-optimal,256,lowpass,cosine,5,,3,,0.71780510 0.24294936 0.02348918,,-90.8639
this-paper-optimal,256,lowpass,cosine,8,,3,,0.72021256 0.24661817 0.02433159,,-90.1328
this-paper-optimal,256,lowpass,cosine,9,,3,,0.72043322 0.24705772 0.02444763,,-90.0216
this-paper-optimal,256,lowpass,cosine,16,,3,,0.72018226 0.24747543 0.02464147,,-89.7763
this-paper-optimal,256,lowpass,cosine,32,,3,,0.71868463 0.24626218 0.02446961,,-89.8360
this-paper-optimal,256,lowpass,cosine,48,,3,,0.71802098 0.24566085 0.02436991,,-89.8905
this-paper-optimal,256,lowpass,cosine,56,,3,,0.71794681 0.24560906 0.02436512,,-89.8878
this-paper-optimal,256,lowpass,cosine,64,,3,,0.71802892 0.24571642 0.02439091,,-89.8626
this-paper-optimal,256,lowpass,cosine,80,,3,,0.71876267 0.24653173 0.02456245,,-89.7198
this-paper-optimal,256,lowpass,cosine,96,,3,,0.72002134 0.24788845 0.02483909,,-89.5041
this-paper-optimal,256,lowpass,cosine,104,,3,,0.71942766 0.24716847 0.02467314,,-89.6582
this-paper-optimal,256,lowpass,cosine,112,,3,,0.71517426 0.24230148 0.02361470,,-90.6211
this-paper-optimal,256,lowpass,cosine,120,,3,,0.69054041 0.21491088 0.01792632,,-97.4532
this-paper-optimal,256,lowpass,cosine,121,,3,,0.68183487 0.20564967 0.01616092,,-100.1084
this-paper-optimal,256,lowpass,cosine,122,,3,,0.66862471 0.19186125 0.01363056,,-105.0926
this-paper-optimal,256,lowpass,cosine,123,,3,,0.64791516 0.17112532 0.01015152,,-115.2405
this-paper-optimal,256,lowpass,cosine,124,,3,,0.61522539 0.14092599 0.00597409,,-134.9277
)FSF";

constexpr std::string_view kLpfCos4t = R"FSF(source,n,kind,expansion,bw,m1,t,binding,coeffs,claimed_psl_db,corrected_psl_db
this-paper-optimal,16,lowpass,cosine,1,,4,,0.70392866 0.23366399 0.03029531 0.00087667,,-146.0821
this-paper-optimal,128,lowpass,cosine,16,,4,,0.81122950 0.39181283 0.08552604 0.00519617,,-111.7170
)FSF";

constexpr std::string_view kLpfSine12 = R"FSF(source,n,kind,expansion,bw,m1,t,binding,coeffs,claimed_psl_db,corrected_psl_db
this-paper-optimal,16,lowpass,sine,1,,1,,0.25378977,,-53.9636
this-paper-optimal,16,lowpass,sine,1,,2,,0.38345785 0.03967402,,-85.8184
this-paper-optimal,16,lowpass,sine,2,,1,,0.29471821,,-51.5144
this-paper-optimal,16,lowpass,sine,2,,2,,0.44209941 0.04964418,,-84.5832
this-paper-optimal,16,lowpass,sine,3,,1,,0.30532944,,-51.4189
this-paper-optimal,16,lowpass,sine,3,,2,,0.45185357 0.04936662,,-87.0183
this-paper-optimal,16,lowpass,sine,4,,1,,0.30116938,,-53.4238
this-paper-optimal,16,lowpass,sine,4,,2,,0.43084340 0.03953840,,-98.3962
this-paper-optimal,16,lowpass,sine,5,,1,,0.28356856,,-58.0553
this-paper-optimal,16,lowpass,sine,5,,2,,0.38034397 0.02312373,,-128.1412
this-paper-optimal,16,lowpass,sine,6,,1,,0.23382832,,-75.4662
this-paper-optimal,32,lowpass,sine,1,,1,,0.25767056,,-53.1752
this-paper-optimal,32,lowpass,sine,1,,2,,0.39547209 0.04415204,,-82.4539
this-paper-optimal,32,lowpass,sine,2,,1,,0.30310978,,-50.1140
this-paper-optimal,32,lowpass,sine,2,,2,,0.46849535 0.06061631,,-78.2533
this-paper-optimal,32,lowpass,sine,3,,1,,0.32069380,,-48.8917
this-paper-optimal,32,lowpass,sine,3,,2,,0.49704474 0.06858542,,-76.4747
this-paper-optimal,32,lowpass,sine,4,,1,,0.32943588,,-48.2806
this-paper-optimal,32,lowpass,sine,4,,2,,0.51071526 0.07267274,,-75.6783
this-paper-optimal,32,lowpass,sine,5,,1,,0.33420777,,-47.9610
this-paper-optimal,32,lowpass,sine,5,,2,,0.51754997 0.07466280,,-75.3856
this-paper-optimal,32,lowpass,sine,6,,1,,0.33675000,,-47.8186
this-paper-optimal,32,lowpass,sine,6,,2,,0.52043844 0.07529411,,-75.4274
this-paper-optimal,32,lowpass,sine,7,,1,,0.33776696,,-47.8124
this-paper-optimal,32,lowpass,sine,7,,2,,0.52004115 0.07461762,,-75.8708
this-paper-optimal,32,lowpass,sine,8,,1,,0.33749498,,-47.9406
this-paper-optimal,32,lowpass,sine,8,,2,,0.51599166 0.07233787,,-76.9414
this-paper-optimal,32,lowpass,sine,9,,1,,0.33585178,,-48.2394
this-paper-optimal,32,lowpass,sine,9,,2,,0.51015041 0.06943183,,-78.2149
this-paper-optimal,32,lowpass,sine,10,,1,,0.33237340,,-48.8114
this-paper-optimal,32,lowpass,sine,10,,2,,0.49831278 0.06387665,,-80.9741
this-paper-optimal,32,lowpass,sine,11,,1,,0.32583856,,-49.9363
this-paper-optimal,32,lowpass,sine,11,,2,,0.48091211 0.05631853,,-85.2173
this-paper-optimal,32,lowpass,sine,12,,1,,0.31286147,,-52.5878
this-paper-optimal,32,lowpass,sine,12,,2,,0.44648212 0.04254211,,-97.4749
this-paper-optimal,32,lowpass,sine,13,,1,,0.28998695,,-57.6495
this-paper-optimal,32,lowpass,sine,13,,2,,0.38850771 0.02408801,,-127.6856
this-paper-optimal,32,lowpass,sine,14,,1,,0.23684948,,-75.2768
this-paper-optimal,64,lowpass,sine,1,,1,,0.25847711,,-53.0312
this-paper-optimal,64,lowpass,sine,1,,2,,0.39745784 0.04489531,,-81.9782
this-paper-optimal,64,lowpass,sine,2,,1,,0.30463713,,-49.9035
this-paper-optimal,64,lowpass,sine,2,,2,,0.47253393 0.06234294,,-77.4768
this-paper-optimal,64,lowpass,sine,3,,1,,0.32300711,,-48.6029
this-paper-optimal,64,lowpass,sine,3,,2,,0.50308404 0.07130852,,-75.4336
this-paper-optimal,64,lowpass,sine,4,,1,,0.33277230,,-47.8610
this-paper-optimal,64,lowpass,sine,4,,2,,0.51940171 0.07671668,,-74.2442
this-paper-optimal,64,lowpass,sine,5,,1,,0.33893120,,-47.3337
this-paper-optimal,64,lowpass,sine,5,,2,,0.52943714 0.08030149,,-73.4660
this-paper-optimal,64,lowpass,sine,6,,1,,0.34302388,,-46.9775
this-paper-optimal,64,lowpass,sine,6,,2,,0.53606170 0.08277506,,-72.9395
this-paper-optimal,64,lowpass,sine,9,,1,,0.34952024,,-46.4077
this-paper-optimal,64,lowpass,sine,9,,2,,0.54634298 0.08676780,,-72.1174
this-paper-optimal,64,lowpass,sine,10,,1,,0.35067227,,-46.3086
this-paper-optimal,64,lowpass,sine,10,,2,,0.54807310 0.08744491,,-71.9870
this-paper-optimal,64,lowpass,sine,12,,1,,0.35214390,,-46.1892
this-paper-optimal,64,lowpass,sine,12,,2,,0.55009564 0.08820053,,-71.8607
this-paper-optimal,64,lowpass,sine,13,,1,,0.35256314,,-46.1608
this-paper-optimal,64,lowpass,sine,13,,2,,0.55053623 0.08832998,,-71.8556
this-paper-optimal,64,lowpass,sine,14,,1,,0.35280889,,-46.1505
this-paper-optimal,64,lowpass,sine,14,,2,,0.55064181 0.08830716,,-71.8880
this-paper-optimal,64,lowpass,sine,17,,1,,0.35259476,,-46.2272
this-paper-optimal,64,lowpass,sine,17,,2,,0.54886332 0.08724092,,-72.2549
this-paper-optimal,64,lowpass,sine,18,,1,,0.35219154,,-46.2938
this-paper-optimal,64,lowpass,sine,18,,2,,0.54778237 0.08666748,,-72.4305
this-paper-optimal,64,lowpass,sine,21,,1,,0.34961256,,-46.6877
this-paper-optimal,64,lowpass,sine,21,,2,,0.54094464 0.08316908,,-73.5343
this-paper-optimal,64,lowpass,sine,22,,1,,0.34807637,,-46.9246
this-paper-optimal,64,lowpass,sine,22,,2,,0.53737357 0.08139764,,-74.1093
this-paper-optimal,64,lowpass,sine,25,,1,,0.34098169,,-47.8462
this-paper-optimal,64,lowpass,sine,25,,2,,0.51714361 0.07169699,,-77.7037
this-paper-optimal,64,lowpass,sine,26,,1,,0.33629501,,-48.5146
this-paper-optimal,64,lowpass,sine,26,,2,,0.50351323 0.06542802,,-80.6003
this-paper-optimal,64,lowpass,sine,29,,1,,0.29131654,,-57.5654
this-paper-optimal,64,lowpass,sine,29,,2,,0.39014983 0.02428727,,-127.6066
this-paper-optimal,64,lowpass,sine,30,,1,,0.23754895,,-75.2331
this-paper-optimal,128,lowpass,sine,1,,1,,0.25866961,,-52.9980
this-paper-optimal,128,lowpass,sine,1,,2,,0.39790432 0.04506228,,-81.8739
this-paper-optimal,128,lowpass,sine,2,,1,,0.30499035,,-49.8571
this-paper-optimal,128,lowpass,sine,2,,2,,0.47326869 0.06265145,,-77.3492
this-paper-optimal,128,lowpass,sine,3,,1,,0.32352075,,-48.5427
this-paper-optimal,128,lowpass,sine,3,,2,,0.50411931 0.07176670,,-75.2746
this-paper-optimal,128,lowpass,sine,4,,1,,0.33356579,,-47.7521
this-paper-optimal,128,lowpass,sine,4,,2,,0.52091718 0.07741818,,-74.0162
this-paper-optimal,128,lowpass,sine,5,,1,,0.33992105,,-47.2036
this-paper-optimal,128,lowpass,sine,5,,2,,0.53129459 0.08117635,,-73.2007
this-paper-optimal,128,lowpass,sine,6,,1,,0.34422081,,-46.8248
this-paper-optimal,128,lowpass,sine,6,,2,,0.53828685 0.08383567,,-72.6326
this-paper-optimal,128,lowpass,sine,7,,1,,0.34731111,,-46.5485
this-paper-optimal,128,lowpass,sine,7,,2,,0.54328646 0.08580429,,-72.2164
this-paper-optimal,128,lowpass,sine,9,,1,,0.35143056,,-46.1744
this-paper-optimal,128,lowpass,sine,9,,2,,0.55003950 0.08857689,,-71.6265
this-paper-optimal,128,lowpass,sine,10,,1,,0.35286223,,-46.0429
this-paper-optimal,128,lowpass,sine,10,,2,,0.55240567 0.08957964,,-71.4128
this-paper-optimal,128,lowpass,sine,17,,1,,0.35795458,,-45.5697
this-paper-optimal,128,lowpass,sine,17,,2,,0.56070172 0.09320452,,-70.6507
this-paper-optimal,128,lowpass,sine,18,,1,,0.35832235,,-45.5354
this-paper-optimal,128,lowpass,sine,18,,2,,0.56128560 0.09346500,,-70.5970
this-paper-optimal,128,lowpass,sine,25,,1,,0.35981918,,-45.3986
this-paper-optimal,128,lowpass,sine,25,,2,,0.56356713 0.09447474,,-70.3955
this-paper-optimal,128,lowpass,sine,26,,1,,0.35992424,,-45.3897
this-paper-optimal,128,lowpass,sine,26,,2,,0.56370818 0.09453365,,-70.3852
this-paper-optimal,128,lowpass,sine,33,,1,,0.36012610,,-45.3818
this-paper-optimal,128,lowpass,sine,33,,2,,0.56373152 0.09448264,,-70.4179
this-paper-optimal,128,lowpass,sine,34,,1,,0.36008321,,-45.3883
this-paper-optimal,128,lowpass,sine,34,,2,,0.56359695 0.09440758,,-70.4385
this-paper-optimal,128,lowpass,sine,41,,1,,0.35919413,,-45.5011
this-paper-optimal,128,lowpass,sine,41,,2,,0.56134446 0.09321844,,-70.7501
this-paper-optimal,128,lowpass,sine,42,,1,,0.35896001,,-45.5300
this-paper-optimal,128,lowpass,sine,42,,2,,0.56075769 0.09291273,,-70.8307
this-paper-optimal,128,lowpass,sine,49,,1,,0.35588084,,-45.9186
this-paper-optimal,128,lowpass,sine,49,,2,,0.55354878 0.08922336,,-71.8262
this-paper-optimal,128,lowpass,sine,50,,1,,0.35509125,,-46.0222
this-paper-optimal,128,lowpass,sine,50,,2,,0.55171848 0.08829714,,-72.0873
this-paper-optimal,128,lowpass,sine,57,,1,,0.34196958,,-47.7700
this-paper-optimal,128,lowpass,sine,57,,2,,0.51840035 0.07211381,,-77.6102
this-paper-optimal,128,lowpass,sine,58,,1,,0.33710504,,-48.4531
this-paper-optimal,128,lowpass,sine,58,,2,,0.50453203 0.06573723,,-80.5261
this-paper-optimal,128,lowpass,sine,61,,1,,0.29163357,,-57.5453
this-paper-optimal,128,lowpass,sine,61,,2,,0.39053743 0.02433444,,-127.5851
this-paper-optimal,128,lowpass,sine,62,,1,,0.23772045,,-75.2224
this-paper-optimal,256,lowpass,sine,1,,1,,0.25871718,,-52.9898
this-paper-optimal,256,lowpass,sine,1,,2,,0.39800921 0.04510134,,-81.8499
this-paper-optimal,256,lowpass,sine,2,,1,,0.30507696,,-49.8458
this-paper-optimal,256,lowpass,sine,2,,2,,0.47343819 0.06272219,,-77.3205
this-paper-optimal,256,lowpass,sine,3,,1,,0.32364543,,-48.5283
this-paper-optimal,256,lowpass,sine,3,,2,,0.50438386 0.07188485,,-75.2329
this-paper-optimal,256,lowpass,sine,4,,1,,0.33375443,,-47.7268
this-paper-optimal,256,lowpass,sine,4,,2,,0.52124554 0.07756874,,-73.9688
this-paper-optimal,256,lowpass,sine,5,,1,,0.34015276,,-47.1741
this-paper-optimal,256,lowpass,sine,5,,2,,0.53168649 0.08135891,,-73.1473
this-paper-optimal,256,lowpass,sine,6,,1,,0.34449599,,-46.7909
this-paper-optimal,256,lowpass,sine,6,,2,,0.53874282 0.08405030,,-72.5730
this-paper-optimal,256,lowpass,sine,7,,1,,0.34763036,,-46.5101
this-paper-optimal,256,lowpass,sine,7,,2,,0.54380754 0.08605138,,-72.1504
this-paper-optimal,256,lowpass,sine,10,,1,,0.35331875,,-45.9905
this-paper-optimal,256,lowpass,sine,10,,2,,0.55321879 0.08997715,,-71.3105
this-paper-optimal,256,lowpass,sine,11,,1,,0.35452867,,-45.8782
this-paper-optimal,256,lowpass,sine,11,,2,,0.55521132 0.09083831,,-71.1278
this-paper-optimal,256,lowpass,sine,17,,1,,0.35877803,,-45.4789
this-paper-optimal,256,lowpass,sine,17,,2,,0.56213715 0.09391588,,-70.4801
this-paper-optimal,256,lowpass,sine,18,,1,,0.35920580,,-45.4382
this-paper-optimal,256,lowpass,sine,18,,2,,0.56282589 0.09422928,,-70.4146
this-paper-optimal,256,lowpass,sine,33,,1,,0.36238608,,-45.1338
this-paper-optimal,256,lowpass,sine,33,,2,,0.56812636 0.09671288,,-69.8870
this-paper-optimal,256,lowpass,sine,34,,1,,0.36248904,,-45.1239
this-paper-optimal,256,lowpass,sine,34,,2,,0.56829507 0.09679311,,-69.8702
this-paper-optimal,256,lowpass,sine,49,,1,,0.36340178,,-45.0367
this-paper-optimal,256,lowpass,sine,49,,2,,0.56976108 0.09748982,,-69.7252
this-paper-optimal,256,lowpass,sine,50,,1,,0.36343316,,-45.0338
this-paper-optimal,256,lowpass,sine,50,,2,,0.56980903 0.09751231,,-69.7207
this-paper-optimal,256,lowpass,sine,65,,1,,0.36361749,,-45.0184
this-paper-optimal,256,lowpass,sine,65,,2,,0.57003197 0.09760569,,-69.7057
this-paper-optimal,256,lowpass,sine,66,,1,,0.36361249,,-45.0192
this-paper-optimal,256,lowpass,sine,66,,2,,0.57001604 0.09759661,,-69.7081
this-paper-optimal,256,lowpass,sine,81,,1,,0.36325661,,-45.0598
this-paper-optimal,256,lowpass,sine,81,,2,,0.56923816 0.09718744,,-69.8062
this-paper-optimal,256,lowpass,sine,82,,1,,0.36321044,,-45.0649
this-paper-optimal,256,lowpass,sine,82,,2,,0.56914104 0.09713704,,-69.8182
this-paper-optimal,256,lowpass,sine,97,,1,,0.36191764,,-45.2090
this-paper-optimal,256,lowpass,sine,97,,2,,0.56640952 0.09572714,,-70.1559
this-paper-optimal,256,lowpass,sine,98,,1,,0.36176948,,-45.2258
this-paper-optimal,256,lowpass,sine,98,,2,,0.56610986 0.09557391,,-70.1927
this-paper-optimal,256,lowpass,sine,113,,1,,0.35649731,,-45.8604
this-paper-optimal,256,lowpass,sine,113,,2,,0.55437465 0.08957867,,-71.7497
this-paper-optimal,256,lowpass,sine,114,,1,,0.35565690,,-45.9690
this-paper-optimal,256,lowpass,sine,114,,2,,0.55244168 0.08860071,,-72.0236
this-paper-optimal,256,lowpass,sine,121,,1,,0.34220146,,-47.7521
this-paper-optimal,256,lowpass,sine,121,,2,,0.51868926 0.07221001,,-77.5887
this-paper-optimal,256,lowpass,sine,122,,1,,0.33729826,,-48.4384
this-paper-optimal,256,lowpass,sine,122,,2,,0.50477138 0.06581010,,-80.5087
this-paper-optimal,256,lowpass,sine,123,,1,,0.32955842,,-49.6598
this-paper-optimal,256,lowpass,sine,123,,2,,0.48564315 0.05755937,,-84.9061
this-paper-optimal,256,lowpass,sine,124,,1,,0.31552645,,-52.3950
this-paper-optimal,256,lowpass,sine,124,,2,,0.44980198 0.04321282,,-97.2742
this-paper-optimal,256,lowpass,sine,125,,1,,0.29171189,,-57.5404
this-paper-optimal,256,lowpass,sine,125,,2,,0.39063247 0.02434591,,-127.5766
this-paper-optimal,256,lowpass,sine,126,,1,,0.23776312,,-75.2198
)FSF";

constexpr std::string_view kLpfSine3t = R"FSF(source,n,kind,expansion,bw,m1,t,binding,coeffs,claimed_psl_db,corrected_psl_db
this-paper-optimal,16,lowpass,sine,1,,3,,0.46234349 0.08532589 0.00383979,,-123.5411
this-paper-optimal,16,lowpass,sine,2,,3,,0.52775336 0.10402439 0.00445106,,-126.8612
this-paper-optimal,16,lowpass,sine,3,,3,,0.52842324 0.09683625 0.00327725,,-139.6982
this-paper-optimal,16,lowpass,sine,4,,3,,0.48812533 0.07000579 0.00122350,,-184.4643
this-paper-optimal,32,lowpass,sine,1,,3,,0.48789146 0.10190255 0.00587383,,-111.2914
this-paper-optimal,32,lowpass,sine,2,,3,,0.57777833 0.14062538 0.00913933,,-106.2566
this-paper-optimal,32,lowpass,sine,4,,3,,0.62791519 0.16785783 0.01175958,,-103.5642
this-paper-optimal,32,lowpass,sine,6,,3,,0.63638807 0.17125663 0.01179316,,-104.5802
this-paper-optimal,32,lowpass,sine,8,,3,,0.62617048 0.16077534 0.01001383,,-109.4187
this-paper-optimal,32,lowpass,sine,10,,3,,0.59354961 0.13368903 0.00639419,,-122.7876
this-paper-optimal,32,lowpass,sine,12,,3,,0.50541308 0.07525688 0.00135058,,-183.7788
this-paper-optimal,64,lowpass,sine,1,,3,,0.49195085 0.10464069 0.00623671,,-109.8657
this-paper-optimal,64,lowpass,sine,2,,3,,0.58503428 0.14635493 0.00998360,,-104.2450
this-paper-optimal,64,lowpass,sine,3,,3,,0.62307521 0.16819815 0.01234090,,-101.4864
this-paper-optimal,64,lowpass,sine,4,,3,,0.64321714 0.18133089 0.01392259,,-99.7548
this-paper-optimal,64,lowpass,sine,8,,3,,0.67269969 0.20288762 0.01680003,,-96.9105
this-paper-optimal,64,lowpass,sine,12,,3,,0.67910680 0.20762695 0.01740466,,-96.5387
this-paper-optimal,64,lowpass,sine,16,,3,,0.67692080 0.20485386 0.01678964,,-97.6285
this-paper-optimal,64,lowpass,sine,20,,3,,0.66655498 0.19472369 0.01501737,,-100.1132
this-paper-optimal,64,lowpass,sine,24,,3,,0.63658864 0.16745070 0.01069552,,-108.5172
this-paper-optimal,64,lowpass,sine,28,,3,,0.50823223 0.07617076 0.00137470,,-184.2297
this-paper-optimal,128,lowpass,sine,1,,3,,0.49263623 0.10510199 0.00629771,,-109.6461
this-paper-optimal,128,lowpass,sine,2,,3,,0.58625287 0.14731946 0.01012654,,-103.9383
this-paper-optimal,128,lowpass,sine,3,,3,,0.62475296 0.16964226 0.01257316,,-101.0514
this-paper-optimal,128,lowpass,sine,5,,3,,0.65826062 0.19255774 0.01549060,,-97.8776
this-paper-optimal,128,lowpass,sine,8,,3,,0.67775832 0.20780252 0.01769238,,-95.7137
this-paper-optimal,128,lowpass,sine,16,,3,,0.69327123 0.22115690 0.01981642,,-93.7793
this-paper-optimal,128,lowpass,sine,24,,3,,0.69703418 0.22450828 0.02036492,,-93.3277
this-paper-optimal,128,lowpass,sine,32,,3,,0.69696073 0.22424522 0.02027796,,-93.4757
this-paper-optimal,128,lowpass,sine,40,,3,,0.69341036 0.22052778 0.01955028,,-94.3096
this-paper-optimal,128,lowpass,sine,48,,3,,0.68257760 0.20958226 0.01749684,,-96.9214
this-paper-optimal,128,lowpass,sine,56,,3,,0.63816756 0.16849670 0.01080551,,-108.3747
this-paper-optimal,128,lowpass,sine,60,,3,,0.50885869 0.07637560 0.00138011,,-183.3738
this-paper-optimal,256,lowpass,sine,1,,3,,0.49278217 0.10519987 0.00631058,,-109.6009
this-paper-optimal,256,lowpass,sine,2,,3,,0.58649819 0.14751268 0.01015498,,-103.8792
this-paper-optimal,256,lowpass,sine,3,,3,,0.62510553 0.16994737 0.01262293,,-100.9546
this-paper-optimal,256,lowpass,sine,5,,3,,0.65881245 0.19306995 0.01557960,,-97.7448
this-paper-optimal,256,lowpass,sine,9,,3,,0.68231639 0.21173691 0.01832430,,-95.0753
this-paper-optimal,256,lowpass,sine,16,,3,,0.69515752 0.22305193 0.02017310,,-93.4021
this-paper-optimal,256,lowpass,sine,32,,3,,0.70296408 0.23038854 0.02145714,,-92.2882
this-paper-optimal,256,lowpass,sine,48,,3,,0.70497803 0.23232644 0.02180478,,-91.9982
this-paper-optimal,256,lowpass,sine,64,,3,,0.70521938 0.23252203 0.02183180,,-91.9882
this-paper-optimal,256,lowpass,sine,80,,3,,0.70403258 0.23126686 0.02158219,,-92.2325
this-paper-optimal,256,lowpass,sine,96,,3,,0.70006007 0.22715283 0.02078271,,-93.0301
this-paper-optimal,256,lowpass,sine,112,,3,,0.68345550 0.21033082 0.01761113,,-96.8084
this-paper-optimal,256,lowpass,sine,120,,3,,0.63851296 0.16872662 0.01082979,,-108.3432
this-paper-optimal,256,lowpass,sine,121,,3,,0.62340238 0.15584703 0.00900611,,-113.5569
this-paper-optimal,256,lowpass,sine,122,,3,,0.60047029 0.13739256 0.00666873,,-122.2881
this-paper-optimal,256,lowpass,sine,123,,3,,0.56676622 0.11270268 0.00407803,,-137.3057
this-paper-optimal,256,lowpass,sine,124,,3,,0.50897719 0.07640434 0.00137999,,-183.4675
)FSF";

constexpr std::string_view kBpfCos = R"FSF(source,n,kind,expansion,bw,m1,t,binding,coeffs,claimed_psl_db,corrected_psl_db
this-paper-optimal,16,bandpass,cosine,1,3,2,symmetric,0.05521061 0.51538902,,-88.6938
this-paper-optimal,16,bandpass,cosine,3,3,1,symmetric,0.31833319,,-38.1280
this-paper-optimal,32,bandpass,cosine,1,3,3,symmetric,0.01341575 0.18239336 0.66846507,,-99.9654
this-paper-optimal,32,bandpass,cosine,1,4,3,symmetric,0.01413180 0.18589731 0.67133344,,-97.4502
this-paper-optimal,32,bandpass,cosine,1,5,3,symmetric,0.01492392 0.18944923 0.67413635,,-95.7020
this-paper-optimal,32,bandpass,cosine,1,6,3,symmetric,0.01550992 0.19193768 0.67603997,,-94.6655
this-paper-optimal,32,bandpass,cosine,2,3,3,symmetric,0.00593527 0.10260339 0.48907967,,-110.7603
this-paper-optimal,32,bandpass,cosine,2,4,3,symmetric,0.00649528 0.10650410 0.49462063,,-108.1992
this-paper-optimal,32,bandpass,cosine,2,5,3,symmetric,0.00655325 0.10662685 0.49461264,,-107.1035
this-paper-optimal,32,bandpass,cosine,2,6,3,symmetric,0.00621402 0.10409494 0.49089871,,-108.3540
this-paper-optimal,32,bandpass,cosine,3,3,2,symmetric,0.10998202 0.60441596,,-67.1669
this-paper-optimal,32,bandpass,cosine,3,3,3,symmetric,0.01540915 0.20326779 0.68644850,,-96.1783
this-paper-optimal,32,bandpass,cosine,3,4,2,symmetric,0.11678818 0.61304248,,-64.4870
this-paper-optimal,32,bandpass,cosine,3,4,3,symmetric,0.01781209 0.21383004 0.69484998,,-92.2755
this-paper-optimal,32,bandpass,cosine,3,5,2,symmetric,0.11980060 0.61668811,,-63.3695
this-paper-optimal,32,bandpass,cosine,3,5,3,symmetric,0.01996593 0.22397766 0.70322575,,-93.7494
this-paper-optimal,32,bandpass,cosine,3,6,2,symmetric,0.10694341 0.59797732,,-63.1539
this-paper-optimal,32,bandpass,cosine,3,6,3,symmetric,0.02061689 0.22719387 0.70600992,,-92.0095
this-paper-optimal,32,bandpass,cosine,4,3,2,symmetric,0.06398674 0.47508009,,-74.5582
this-paper-optimal,32,bandpass,cosine,4,4,2,symmetric,0.06356937 0.47427016,,-74.2131
this-paper-optimal,32,bandpass,cosine,4,5,2,symmetric,0.06175519 0.47072688,,-74.7596
this-paper-optimal,32,bandpass,cosine,4,6,2,symmetric,0.05725707 0.46153755,,-76.1593
this-paper-optimal,32,bandpass,cosine,5,3,1,symmetric,0.40286142,,-37.3162
this-paper-optimal,32,bandpass,cosine,5,3,2,symmetric,0.11209911 0.60438838,,-66.5169
this-paper-optimal,32,bandpass,cosine,5,4,1,symmetric,0.40566197,,-37.3280
this-paper-optimal,32,bandpass,cosine,5,4,2,symmetric,0.11807869 0.61162118,,-63.8679
this-paper-optimal,32,bandpass,cosine,5,5,1,symmetric,0.40805017,,-37.3174
this-paper-optimal,32,bandpass,cosine,5,5,2,symmetric,0.11799712 0.61033320,,-62.9651
this-paper-optimal,32,bandpass,cosine,5,6,1,symmetric,0.40853552,,-37.4167
this-paper-optimal,32,bandpass,cosine,5,6,2,symmetric,0.11978609 0.61179204,,-63.3256
this-paper-optimal,32,bandpass,cosine,6,3,1,symmetric,0.31604603,,-46.4761
this-paper-optimal,32,bandpass,cosine,6,4,1,symmetric,0.32331246,,-46.1026
this-paper-optimal,32,bandpass,cosine,6,5,1,symmetric,0.32970336,,-45.3760
this-paper-optimal,32,bandpass,cosine,6,6,1,symmetric,0.33198737,,-45.3631
this-paper-optimal,32,bandpass,cosine,7,3,1,symmetric,0.40106369,,-37.0456
this-paper-optimal,32,bandpass,cosine,7,4,1,symmetric,0.40173710,,-37.1953
this-paper-optimal,32,bandpass,cosine,7,5,1,symmetric,0.39808337,,-37.8312
this-paper-optimal,32,bandpass,cosine,7,6,1,symmetric,0.38091424,,-40.3229
this-paper-optimal,128,bandpass,cosine,9,11,3,symmetric,0.02803011 0.26317006 0.73484317,,-86.8749
this-paper-optimal,128,bandpass,cosine,11,11,2,symmetric,0.10935022 0.59352882,,-63.1817
this-paper-optimal,128,bandpass,cosine,13,11,1,symmetric,0.38327482,,-41.0752
this-paper-optimal,128,bandpass,cosine,14,21,3,symmetric,0.01763535 0.20642264 0.67535053,,-94.7618
this-paper-optimal,128,bandpass,cosine,15,21,3,symmetric,0.03024620 0.27270799 0.74228370,,-85.4902
this-paper-optimal,128,bandpass,cosine,16,21,2,symmetric,0.08798582 0.54812749,,-71.2893
this-paper-optimal,128,bandpass,cosine,16,21,3,symmetric,0.01840510 0.21119705 0.68093955,,-93.9015
this-paper-optimal,128,bandpass,cosine,17,21,2,symmetric,0.11029726 0.59390519,,-63.3924
this-paper-optimal,128,bandpass,cosine,18,21,1,symmetric,0.35147932,,-45.9745
this-paper-optimal,128,bandpass,cosine,18,21,2,symmetric,0.08954170 0.55168569,,-70.8694
this-paper-optimal,128,bandpass,cosine,19,21,1,symmetric,0.38134766,,-41.5628
this-paper-optimal,128,bandpass,cosine,20,21,1,symmetric,0.35315763,,-45.7751
this-paper-optimal,128,bandpass,cosine,26,9,3,symmetric,0.01996045 0.22014430 0.69109271,,-90.7448
this-paper-optimal,128,bandpass,cosine,28,9,2,symmetric,0.09172043 0.55645535,,-69.0845
this-paper-optimal,128,bandpass,cosine,30,9,1,symmetric,0.35385726,,-45.1061
this-paper-optimal,128,bandpass,cosine,31,3,3,symmetric,0.02488786 0.24887129 0.72207503,,-86.7294
this-paper-optimal,128,bandpass,cosine,31,9,3,symmetric,0.02857646 0.26552287 0.73602786,,-86.3809
this-paper-optimal,128,bandpass,cosine,31,17,3,symmetric,0.03003303 0.27133726 0.74059324,,-85.3475
this-paper-optimal,128,bandpass,cosine,31,21,3,symmetric,0.02892136 0.26601945 0.73580759,,-85.4643
this-paper-optimal,128,bandpass,cosine,33,3,2,symmetric,0.11169908 0.59724625,,-66.0456
this-paper-optimal,128,bandpass,cosine,33,9,2,symmetric,0.10906247 0.59007419,,-62.5410
this-paper-optimal,128,bandpass,cosine,33,17,2,symmetric,0.11016850 0.59238007,,-62.7106
this-paper-optimal,128,bandpass,cosine,33,21,2,symmetric,0.10695289 0.58753822,,-63.1082
this-paper-optimal,128,bandpass,cosine,35,3,1,symmetric,0.36545360,,-40.3677
this-paper-optimal,128,bandpass,cosine,35,9,1,symmetric,0.37486947,,-41.3159
this-paper-optimal,128,bandpass,cosine,35,17,1,symmetric,0.37995017,,-41.0938
this-paper-optimal,128,bandpass,cosine,35,21,1,symmetric,0.38442987,,-40.4066
)FSF";

constexpr std::string_view kComparative = R"FSF(source,n,kind,expansion,bw,m1,t,binding,coeffs,claimed_psl_db,corrected_psl_db
this-paper-optimal,16,lowpass,cosine,1,,1,,0.43306933,,-42.4198
rabiner,16,lowpass,cosine,1,,1,,0.42631836,-39.75363,-41.2697
lyons,16,lowpass,cosine,1,,1,,0.41924081,-44.90,-40.1413
this-paper-optimal,16,lowpass,cosine,2,,1,,0.41702850,,-41.3899
rabiner,16,lowpass,cosine,2,,1,,0.40397949,-37.6135,-39.7227
lyons,16,lowpass,cosine,2,,1,,0.38969818,-45.80,-38.1103
this-paper-optimal,16,lowpass,cosine,3,,1,,0.41001590,,-41.2493
rabiner,16,lowpass,cosine,3,,1,,0.39454346,-36.5772,-39.1661
lyons,16,lowpass,cosine,3,,1,,0.36942214,-47.30,-36.5836
this-paper-optimal,16,lowpass,cosine,4,,1,,0.40474097,,-41.6636
rabiner,16,lowpass,cosine,4,,1,,0.38916626,-35.8725,-39.1337
lyons,16,lowpass,cosine,4,,1,,0.34918551,-49.60,-34.7897
this-paper-optimal,16,lowpass,cosine,5,,1,,0.39666905,,-43.2175
rabiner,16,lowpass,cosine,5,,1,,0.38840332,-35.3170,-41.1130
this-paper-optimal,16,lowpass,cosine,6,,1,,0.37587659,,-49.3332
rabiner,16,lowpass,cosine,6,,1,,0.40155639,-35.5195,-40.2540
this-paper-optimal,33,lowpass,cosine,1,,1,,0.42980382,,-43.0041
rabiner,33,lowpass,cosine,1,,1,,0.42994995,-43.0316,-42.9621
lyons,33,lowpass,cosine,1,,1,,0.42659097,-43.60,-42.4198
this-paper-optimal,33,lowpass,cosine,2,,1,,0.41035321,,-42.4130
rabiner,33,lowpass,cosine,2,,1,,0.41042481,42.4253,-42.3953
lyons,33,lowpass,cosine,2,,1,,0.40433257,-43.50,-41.5038
this-paper-optimal,33,lowpass,cosine,3,,1,,0.40135763,,-42.4017
rabiner,33,lowpass,cosine,3,,1,,0.40141601,-42.4090,-42.3879
lyons,33,lowpass,cosine,3,,1,,0.39239983,-44.00,-41.2145
this-paper-optimal,33,lowpass,cosine,4,,1,,0.39637170,,-42.4538
rabiner,33,lowpass,cosine,4,,1,,0.39641724,-42.4595,-42.4433
lyons,33,lowpass,cosine,4,,1,,0.38433890,-44.40,-40.9768
this-paper-optimal,128,lowpass,cosine,1,,1,,0.42882545,,-43.1751
rabiner,128,lowpass,cosine,1,,1,,0.42889404,-43.1530,-43.1553
lyons,128,lowpass,cosine,1,,1,,0.42864273,-43.20,-43.1428
)FSF";

constexpr std::string_view kSensitivity = R"FSF(source,n,kind,expansion,bw,m1,t,binding,coeffs,claimed_psl_db,corrected_psl_db
this-paper-optimal,33,lowpass,cosine,8,,3,,0.69966784 0.22290377 0.01921459,,-96.1253
rabiner,33,lowpass,cosine,8,,3,,0.70362590 0.22815933 0.02062988,,-92.8212
lyons,33,lowpass,cosine,8,,3,,0.70271751 0.22868478 0.02098636,-92.90,-77.6335
)FSF";

constexpr std::string_view kText = R"FSF(source,n,kind,expansion,bw,m1,t,binding,coeffs,claimed_psl_db,corrected_psl_db
rabiner,32,lowpass,cosine,6,,1,,0.37897949,-40.85183477,-40.9934
lyons,32,lowpass,cosine,6,,1,,0.37172559,-45.5,-40.1590
rorabaugh,32,lowpass,cosine,6,,1,,0.392011,-42.464,-42.464
rorabaugh,21,lowpass,cosine,5,,2,,0.579666 0.0985806,,
this-paper-optimal,21,lowpass,cosine,5,,2,,0.57952231 0.09850646,,
rabiner,16,lowpass,sine,4,,3,,0.58824614 0.10690445 0.00327759,-129.92168427,-70.3304
rabiner,33,lowpass,cosine,9,,2,,0.58771575 0.10502930,-67.85412312,-67.8157
lyons,33,lowpass,cosine,9,,2,,0.54128598 0.08116809,-75.3,-53.3841
this-paper-optimal,118,bandpass,cosine,11,23,1,symmetric,0.38765962,,-41.2769
rybka,118,bandpass,cosine,11,23,1,symmetric,0.385346,,-40.9800
this-paper-optimal,118,bandpass,cosine,11,23,1,independent,0.38257443 0.39897929,,-42.0855
rabiner,16,bandpass,cosine,3,3,1,symmetric,0.45593262,-34.175276,-33.5714
this-paper-optimal,16,bandpass,cosine,3,3,1,independent,0.31042874 0.45596402,,-55.1661
rabiner,32,bandpass,cosine,2,6,3,symmetric,0.00422363 0.08800332 0.46619571,-113.033724,-88.2483
this-paper-optimal,32,bandpass,cosine,3,5,3,independent,0.00924465 0.15712976 0.62806540 0.68888716 0.19070263 0.01184814,,-111.7948
)FSF";

}  // namespace

std::string_view embedded_manifest() { return kManifest; }

const std::vector<EmbeddedTable>& embedded_tables() {
  static const std::vector<EmbeddedTable> tables = {
      {"lpf-cos-12", kLpfCos12},
      {"lpf-cos-3t", kLpfCos3t},
      {"lpf-cos-4t", kLpfCos4t},
      {"lpf-sine-12", kLpfSine12},
      {"lpf-sine-3t", kLpfSine3t},
      {"bpf-cos", kBpfCos},
      {"comparative", kComparative},
      {"sensitivity", kSensitivity},
      {"text", kText},
  };
  return tables;
}

}  // namespace fsf
