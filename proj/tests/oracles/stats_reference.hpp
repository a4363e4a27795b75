// Generated by gen_stats_reference.py -- do not edit by hand.
#pragma once

#include <vector>

namespace fairaudit::testing {

struct StatsReferenceCase {
  std::vector<double> x;
  std::vector<double> y;
  double welch_t;
  double welch_p;
  double pooled_t;
  double pooled_p;
  double mwu_u;
  double mwu_p;
  bool mwu_exact;
};

inline const std::vector<StatsReferenceCase>& stats_reference_cases() {
  static const std::vector<StatsReferenceCase> cases = {
      {
          {-0.3889547593024333, 0.16349383912875726, -0.3424342419079174, -0.6991535332562332},
          {-0.870174123279321, 1.7206211100824222, 1.808730910758827, 0.2528141732969495, -2.296852640372429, 4.232782492071159, 0.14732705091735265, 0.14376461673417418},
          -1.3380953671435585, 0.21820518386095203, -0.9467510931514922, 0.36608116306891714,
          10.0, 0.36767676767676766, true},
      {
          {3.0, 1.0, 5.0, 3.0, 0.0},
          {4.0, 4.0, 2.0, 2.0, 1.0, 5.0, 6.0},
          -0.9276625296541315, 0.3796325584940269, -0.9401048101194992, 0.36931720230660636,
          12.0, 0.44696969696969696, true},
      {
          {0.6320744842995594, -0.013203522958643969, -0.9863103827441368, 1.5753761901577221, 0.6560650609301832, 0.12058005784676727, -0.3086121996668544, 1.301049269656081, 0.3782841453450377, 0.8589254758992386, -0.45545383177294835, -0.9538888959182569, 1.5463175884266338, 0.3357810500741921, -1.9724667782513747, -1.2455980757996605, -0.7211383388719668, -1.069937588369116, -0.3570014407046143, -0.4382598690793025, 1.632441843969853, 0.9776176717481426, 0.8864123221440117, 1.832324875807118, 0.8200969971813585, -1.0767498667007889, -0.5494224574492611, 2.2009420597180176, 0.3070640024037967, 0.6203561564565331, -0.31860245987423624, 0.09258015496872256},
          {0.857208073332711, -0.9460186513393267, 0.11564986843132698, 0.32963234086350346, -0.9091003926361609, 0.3378812186070657, -0.02624353402791932, -1.6224295417864838, -0.48619811806719637, -0.02269127017956253, -0.043748288331247207, -0.005489537104456266, 0.4318583272506774, 0.20232504293427178, 0.11634223326334603, 0.3128178120710766, 0.6102379106620519, 0.19417325523742718, -0.4891530434259994, -0.20560816007330257, 0.475398100167319, 0.0709883061943505, -0.4462222765778242, -0.3036316324401225, -0.6805431127901623, -0.2532495261559874, 0.3676300689756765, 0.13276444404046656, -0.6775298436474182, 0.5154945983179886, 0.10762275516900371, 0.6156441024402174, -0.1252664822301507, -1.1204226047374433, -0.4868955669953362, -0.2797439076881899, 0.9370794762674581, -0.5783246795962396},
          1.3684142887788222, 0.17780741710561865, 1.4341856230487475, 0.15610212491642542,
          709.0, 0.23607961837781322, false},
      {
          {2.0, 3.0, 1.0, 2.0, 0.0, 3.0, 1.0, 0.0, 1.0, 1.0, 0.0, 2.0, 1.0, 1.0, 3.0, 0.0, 2.0, 2.0, 1.0, 0.0, 0.0, 2.0, 2.0, 2.0, 3.0},
          {0.0, 0.0, 3.0, 3.0, 3.0, 3.0, 2.0, 1.0, 3.0, 0.0, 0.0, 0.0, 4.0, 3.0, 1.0, 0.0, 3.0, 2.0, 0.0, 2.0, 4.0, 3.0, 2.0, 3.0, 1.0, 3.0, 2.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0},
          -0.6454201689074783, 0.5212908570765395, -0.6203830660427315, 0.5375222498645524,
          379.5, 0.5988304559788824, false},
      {
          {3.440646056354965, 1.0933686435164007, 1.372120236850605, 0.13869256348519465, 0.5631658215038627, 1.8057304722864247},
          {0.3855213842593946, 0.99178396978985, 0.5180805618489059, 12.377057655851416, 1.8862983604281198, 1.288656957690692, 3.820001872959274, 2.4797518556344484, 1.9642631123848115, 2.6324008914087003, 1.1303682724353632, 1.3718521774777843, 0.5368124424241439, 0.7882233787058536, 0.04580969751648595, 0.2782075046260202, 0.2718820389276622, 0.8737430464817937, 0.9718664072524485, 0.10458633584694998, 1.1941337565561312, 3.0609211521451662, 4.7379070705321515, 0.9938379066862182, 0.10537084327183083, 4.261253651781329},
          -0.7109407408022989, 0.486470326040929, -0.45834460724809506, 0.6500079623045678,
          80.0, 0.9437889542172079, true},
      {
          {0.8688522238872477, -0.1991209946806193, 0.22136790104012813, -0.940069411233141},
          {-0.4721813192249784, 1.1775084399439246, 2.526135485561819},
          -1.1511635497393287, 0.3392370624839953, -1.277125710144011, 0.2576479745358202,
          3.0, 0.4, true},
      {
          {2.0, 1.0, 5.0, 1.0, 5.0, 2.0, 3.0},
          {1.0, 4.0, 6.0, 6.0, 5.0},
          -1.492913577808735, 0.17570999141192886, -1.5470704065052336, 0.15288436757749654,
          9.0, 0.1893939393939394, true},
      {
          {0.1699485963072302, -0.012769484787774595, -0.30384717548237716, 0.00947647881526668, -1.305175780517434, 1.4820143153726817, -1.410576341262564, 0.09287775880896235, -0.724386166550672, -0.17851962742662764, 0.4982981636574805, 0.6615266387852273, 1.924249509132606, 0.6418482697660653, -0.8822527055574644, -0.5633448975032497, 0.3915806777412178, 1.3032144585937633, 0.9119043307121414, 0.4499164319579774, -0.47076470031569956, -0.4577098107350586, -1.5188352871476156, -0.34362520930449164, -0.8156237827492746, -0.26257908188379403, 0.649169459453227, 0.28095076485578563, 0.09953703771349537, -0.913373545166409, -0.40409897414430507, 0.8172060614700406, 1.2876544192790522, -0.34610804431851433, 0.5340360095461084, 0.3479983048784962, 1.5109182064544466, 0.47258278291740174, 0.585486695157633, 0.4097139400606871},
          {-0.31380442545774245, 0.12133342426794483, -1.0083637169768054, 0.1407943262198973, 0.20299823253228366, -0.5537900295530054, -0.07923173206588742, 0.5676366504350808, -0.37568772862338023, -0.3201747896401956, 0.7991327015086187, -1.2708281719716847, -0.0616051617615402, 0.10427836650925537, -0.32966600303375576, -0.40088870035637314, -0.5275674946744005, 0.08119114128827684, -0.49234567941441715, -0.15017801268502096, -0.6775197692919522, -1.1775697564669818, 0.3238789678280903, 0.3538615219977885, 0.056919296080075336, 0.24842526520011982, -0.16731893430596523, 0.5881373874595561, 0.8087559847042409, 0.3442171755345559, 1.1439426919097324, 0.2945188373246796, -0.37214564303327596, -0.044207663371515146, -0.03229356199400105, 0.13445277277013684, -0.10485951681795083, -0.23975630468550022, -0.3592492437593984},
          1.217885623887741, 0.22760046134023623, 1.2111811147692693, 0.22953018045357026,
          903.0, 0.22966923640821613, false},
      {
          {2.0, 0.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 3.0, 3.0, 2.0, 2.0, 1.0, 0.0, 0.0, 2.0, 3.0, 3.0, 3.0, 2.0, 3.0, 2.0, 3.0, 0.0},
          {3.0, 0.0, 2.0, 3.0, 1.0, 1.0, 0.0, 3.0, 0.0, 4.0, 3.0, 2.0, 3.0, 0.0, 2.0, 1.0, 4.0, 3.0, 4.0, 0.0, 4.0, 0.0, 4.0, 2.0, 1.0, 3.0, 2.0, 4.0, 3.0, 2.0, 2.0, 2.0, 1.0},
          -1.5927575485717291, 0.11691054577802033, -1.554708765370277, 0.1256493171500452,
          320.0, 0.13876941638078502, false},
      {
          {0.4922895192112733, 0.29021075148701697, 0.3857041359901619, 0.35749267021573383, 0.3591654131233274, 1.619464702176373},
          {4.7829572262308515, 1.7144614555244535, 0.14118761207208333, 3.3066906020873477, 0.023389606693796017, 2.0470408054924736, 0.5054898414873883, 1.98934768188992, 0.6999230656429003, 0.014309256612605098, 0.18523457077419883, 2.7647070977680217, 1.1543524135977339, 0.1811941589144446, 1.7314210372356325, 0.10627371844834087, 7.888038040926276, 2.048474330639269, 0.19457178949378207, 0.4308001355208555, 1.6269534824147973, 3.3270101485371826, 0.27469402010954713, 6.184616794387093, 3.452325896788606},
          -2.7977377825307004, 0.009082754660925063, -1.5086965130481826, 0.14219505200850982,
          53.0, 0.29061458872359874, true},
      {
          {0.8726721100136998, 0.003997525497601605, 0.8992576637718261, 0.25809613218550664},
          {1.5558915877730612, 0.4479174208289245, 0.5508077019764634, -0.2709040215435671, 0.8590488008070015, 1.9225136566197385, 1.8757266968274564, 1.6829104911947956},
          -1.5774992706086304, 0.14681401256061025, -1.303636700879125, 0.22156945672438388,
          10.0, 0.36767676767676766, true},
      {
          {3.0, 5.0, 2.0, 4.0, 1.0, 3.0, 3.0, 0.0, 1.0},
          {2.0, 4.0, 4.0, 1.0, 6.0, 5.0, 4.0},
          -1.522291441219023, 0.15271496669936888, -1.5365145287738808, 0.1467005581525487,
          17.5, 0.14143356643356644, true},
      {
          {-0.10350714455700753, 0.309941568469472, -0.09234093889485344, 0.6158661127654074, -0.14372122207466917, -1.0959847896827526, -0.2942323581667107, -1.3923446238656063, -1.977823040137144, -1.2892995566899867, 0.289600539271341, -0.9378735142879672, -1.7767804531883198, 0.872390214604237, -0.14516074777682578, -0.5610265628578105, 1.9402215016259907, 0.30985495085729425, 1.4599775145052547, -0.6257128699846166, 2.1471823958395877, 1.5037473376701709, -0.7235865496798355, -0.5633832023421634, -0.8499026614800247, -0.2416931489284266, 0.11174133405306161, 3.341562278341633, -1.3987769968140042, 0.24010470956740107, 0.6386227906090721, 0.7915213351862834, 1.4543351089425842, -0.35609056955464163, 1.0657339961096663},
          {-0.8831632451404887, -1.8271590896199217, -0.1317416423602138, -1.6563354004989617, -1.1147595467042906, -0.28455947168852147, -1.6890233317866787, -1.9702149849578374, -0.8210602847846338, -0.7358455729855434, -0.5140326872540104, 0.3716463920477854, -0.4358502253989553, 0.38387661481450175, -1.5611241542679388, -0.795707335298259, -0.8348018341119363, -0.8315392733579975, -1.5534224517854445, -0.6716832915161448, 0.17972975571263816, -1.4596259450563247, -0.36912567957934034, -1.2674463552290074, -2.480074437325344, -0.3935651511976939, -0.5931829961529644, -0.8444984434235473, 0.4411483704901412, -0.5449961199297861, -2.2389367878337296},
          3.935821819956462, 0.00022188681876418928, 3.8375675243548772, 0.00028703188054041433,
          806.0, 0.000727378423791344, false},
      {
          {0.0, 3.0, 1.0, 0.0, 0.0, 3.0, 1.0, 1.0, 0.0, 2.0, 3.0, 1.0, 0.0, 3.0, 3.0, 2.0, 2.0, 1.0, 1.0, 0.0, 3.0, 0.0, 0.0, 3.0, 3.0, 1.0, 2.0, 1.0, 3.0, 2.0, 0.0, 2.0, 3.0},
          {2.0, 1.0, 1.0, 1.0, 4.0, 4.0, 0.0, 0.0, 3.0, 3.0, 3.0, 2.0, 2.0, 0.0, 1.0, 2.0, 0.0, 1.0, 1.0, 4.0, 4.0, 4.0, 1.0, 1.0, 0.0},
          -0.7989157437981103, 0.4284214461974766, -0.8194786206868834, 0.41598752646635573,
          369.5, 0.49315851061850147, false},
      {
          {1.8032353814401423, 0.3366661710383436, 0.38328915127000696, 1.0911492875905968, 0.506380325490476, 0.33129869573119863},
          {0.11756608397786675, 6.4582593263125165, 0.5701508690557863, 0.46422915748469784, 1.7689169393953248, 0.7499186971497895, 1.941495054033525, 3.390195503118902, 2.793522284700646, 0.18250295179983067, 3.1407378857915877, 0.4664583400760407, 2.2041560120178922, 0.762453904199761, 3.826591575793403, 0.7371373960631895, 2.974812808237819, 0.135747215844398, 2.235411347659874, 3.908533898920769, 1.5972662899396284, 0.799096901968364, 2.7706111458247524, 0.4710224751191011, 0.39591624074029025, 1.351046710852694, 0.14992265410031658},
          -2.537352125913239, 0.018805335694898246, -1.5020072557703024, 0.14321403159531723,
          49.0, 0.14469179319012468, true},
      {
          {1.2212885689745503, -0.20955802030624426, -0.22023222662861663, 0.9591833613977039, 1.555856509195226, -0.8637278341271994, -0.4556386991962107},
          {-2.5129232337215344, -0.8748413683205322, 0.5811797140233541, -1.0019635322876392, 0.6510335396843334},
          1.3364870789779026, 0.22392383470583907, 1.4173432839055693, 0.18677815135150644,
          27.0, 0.14898989898989898, true},
      {
          {5.0, 3.0, 1.0, 3.0, 1.0, 5.0, 0.0, 3.0},
          {5.0, 3.0, 5.0, 4.0, 4.0, 1.0, 3.0, 6.0},
          -1.4653461242326609, 0.16556308269991007, -1.4653461242326609, 0.16492246174221337,
          19.0, 0.18383838383838383, true},
      {
          {0.30834900622531186, -0.4171292347794339, 0.3588717886902591, 1.0742670302506154, -0.05316177712424395, 0.7331469654591589, -0.31206831739133123, -0.3219963382617786, 1.4546374536381972, -0.5336135867965769, -1.6472258287636679, 1.5528544483141897, -0.14727734966059552, 1.5690411043627286, 0.008907783091527594, -1.7426606360535388, -0.5005670375211986, 0.39811332402024135, -0.983026011680074, 1.13294209699637, 1.1423445760572708, -0.35437425772144754, 0.8739888206682068, -0.5783645936676628, 0.43619152589544186, 2.017693640988454, 0.04823971507488665, -0.05002845711911269, -1.4415549489144381, 0.6930483652865368, -0.0707190229621461, -0.8390289429385546, -0.7898641522816673, 1.159224025770243, 0.9746669661973303, 1.5346288375066044},
          {-0.1333439449238834, 0.021375314003343804, -1.0763710177044366, 0.5444152445007304, 0.14974839323225492, -0.09799744310204772, 0.20186050697749391, 1.962323923460297, -0.07379018461083162, -0.7940812514727995, 1.2718986863765605, 0.9040896738976101, -1.208978725469654, -0.4106896990084686, -0.1246806940294557, 0.6534711285791766, -0.8618652929350177, 0.17751800286051783, 0.1185183889705509, 0.089343649500769, -0.6951387044553297},
          0.675657507953092, 0.5024048164633763, 0.6375166838243248, 0.5264335149658461,
          418.0, 0.5134657657569917, false},
      {
          {2.0, 2.0, 3.0, 3.0, 1.0, 1.0, 0.0, 0.0, 2.0, 3.0, 1.0, 3.0, 3.0, 1.0, 1.0, 3.0, 3.0, 2.0, 3.0, 1.0, 1.0},
          {0.0, 0.0, 4.0, 3.0, 3.0, 2.0, 0.0, 2.0, 2.0, 3.0, 0.0, 1.0, 4.0, 0.0, 0.0, 3.0, 1.0, 3.0, 4.0, 1.0, 4.0, 1.0, 3.0, 3.0, 2.0, 4.0, 0.0, 2.0, 0.0, 0.0},
          0.06608783120800814, 0.947576848758463, 0.062184032992280314, 0.9506692418875357,
          320.0, 0.9295297292235333, false},
      {
          {0.7336162853379351, 0.536289394719571, 0.13910260164776864, 1.1522533780701225, 0.26801068315202625, 1.3969156728212817},
          {0.2600845544137581, 3.7269185756082486, 0.6250782403432564, 0.13108463319075475, 0.3246303633296329, 1.8483485030200517, 3.5354465826169994, 0.35772241801913984, 2.856787394972235, 0.250832481646802, 0.5872004336433755, 0.1648519168374798, 2.9827358443096976, 0.9616101496021371, 2.527418897547175, 0.33112682901190515, 1.9934351568279376, 0.11851920468101707, 2.2192273124508115, 0.08519645224343991, 0.24686681670280197, 0.6864146227747724, 0.5322668590128642},
          -1.4955701400770764, 0.14944923726801607, -0.9447274120293417, 0.3531761484178344,
          65.0, 0.854414550966275, true},
      {
          {-0.3559516376225852, -1.113441083947909, 2.8863520665923117, -0.08588171078826304},
          {-1.6424429131680889, -0.6596701225837573, 1.576366920046809, -0.76729001947699},
          0.6333712360663165, 0.5511755609281968, 0.6333712360663165, 0.5498559993741317,
          11.0, 0.4857142857142857, true},
      {
          {5.0, 4.0, 4.0, 5.0, 1.0, 4.0, 4.0, 1.0, 2.0},
          {1.0, 3.0, 2.0, 4.0, 1.0, 3.0, 2.0, 4.0},
          1.2335879094879227, 0.23676247687217378, 1.2126781251816652, 0.2440067425909769,
          49.0, 0.19712052653229123, true},
      {
          {0.10147742704978215, -0.9546462359695133, 0.0007078213512707478, -0.9337703534575628, -0.4569944702239969, -0.28299653585484785, 0.7674780513444646, -2.924668942564171, -0.11496734789288546, 0.33848727327096473, -1.0610092166400633, 0.20838964301833426, 0.5182356618491717, 0.3389000311606273, -0.06056496711212191, 0.19785943596338107, -1.1446696455913954, -0.10524820562000559, -1.5136020940542991, 2.880761529842958, 0.8158730804671952, -0.41775218663655184, -0.2616941109592775, -1.266474696017688, -2.0663950982252532, 1.2988532233734695, 0.6086027188999039, -0.614817493508575, 0.4708959755746144, 0.5138043947332759, 0.6474532545610759, 0.570991987035902, 0.5988689281351214, 1.1532182177339814, 0.6428702857819305, 0.7327273648317612, 1.15795130572577},
          {0.30778649397769675, 0.012653769841132423, 0.4754622581269859, 0.8217555220694295, -0.8938229874442165, 1.9005303210622886, 0.9177480368611657, 0.544827890061033, 0.11665154888967594, 0.19690069689786505, 1.3649064919476297, 1.6598169670590723, 0.5717300485960227, 0.34791509506173013, 0.6728546183969718, -0.08461153516986963, -0.33093232270864714, 0.3828113994999549, -0.18970501433466258, 0.5223979234465498, -0.0804197078939069, 0.4128359049821784, 0.23784823606070207, 1.2380506903127002, 0.513896125215491, -0.19245476318399435, 0.6112295252317158, 0.43157478716532693, 1.3503916072479916, 0.6222920364907099, 0.5848196618711551, 1.025032517925038, 1.5775852281454694},
          -2.5957127696928217, 0.011886890793904962, -2.5230874227692284, 0.01397638019716061,
          416.0, 0.02246152344808249, false},
      {
          {1.0, 1.0, 2.0, 1.0, 1.0, 3.0, 3.0, 2.0, 3.0, 2.0, 3.0, 3.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 3.0, 3.0, 2.0},
          {0.0, 0.0, 1.0, 0.0, 3.0, 4.0, 3.0, 1.0, 3.0, 0.0, 1.0, 1.0, 2.0, 4.0, 3.0, 1.0, 4.0, 0.0, 0.0, 1.0, 0.0, 3.0, 3.0, 4.0, 4.0, 0.0, 1.0, 2.0, 0.0, 2.0, 1.0, 1.0, 1.0},
          0.046849361250829544, 0.9628067747401223, 0.044387786555982085, 0.9647590335922002,
          396.5, 0.7764066989377513, false},
      {
          {0.3367096855623497, 0.38022067242676744, 0.4337407745068288, 2.5094267637468453, 0.5387335178615015},
          {0.6323037802410941, 0.3601367485124939, 0.48808209882663345, 1.5081526449225209, 0.14618655853053283, 0.012124423209372957, 0.6431626832800613, 2.2525302994062346, 2.1242024295778803, 0.16590746001272766, 1.105687933376078, 0.8656462578441118, 0.300967685966209, 0.9493186842221635, 0.7930950331904509, 3.7071271654013582, 0.24755772547791932, 2.0148495042898498, 4.6724706793676045, 1.0656365013045448, 0.5607697286249239, 0.5524594988577866, 0.3250035374700671, 3.3659511333632355, 0.8085063804023025, 2.216828418107444, 2.173427883983423, 1.3805430340993543, 0.3209946457344595},
          -0.8349792197203361, 0.4340607860673097, -0.7151270472038578, 0.47971594036300247,
          58.0, 0.5076188833304582, true},
      {
          {0.9526278254730619, 0.5832930951802021, -0.5023281812154421, 0.9991524449042959, -0.8748059697805382, -0.04232191597031742},
          {0.7310041818098904, 0.761971041862682, 2.756808318419064, 1.2603687195832916, -0.7060063373307424, -1.4885127524806643, 0.3406410195699276},
          -0.5536416954046905, 0.592294867063788, -0.5306373705141185, 0.6062170105631817,
          18.0, 0.7307692307692307, true},
      {
          {3.0, 3.0, 0.0, 1.0, 0.0, 4.0, 3.0},
          {1.0, 2.0, 5.0, 4.0},
          -0.9074852129730302, 0.4004783073347729, -0.938679328162116, 0.37240187160880567,
          9.0, 0.4, true},
      {
          {-1.0720592793179662, 1.1542547959207576, -0.4329479505718387, -0.8323011572143902, 0.2405305687338034, -0.19678001809023443, -0.5313949560822169, -0.3759693104865161, -0.06496021368625156, -0.09786580077775962, -2.9221825530399035, 0.5805637818061283, -0.8395934022517995, 0.7206912508411842, 0.45569253002089777, -0.14383807840425433, -0.706018712353747, 0.16939977501779904, 0.5158754615928915, -1.4898384731384122, 0.2743441132830795, -0.29352192952757256, 1.5394058405081414, 0.35970858819391094, 1.1746312628280904, 0.007822072199065121, 0.26992203619178934, 0.7358134530420276},
          {-0.4057864244798221, 0.38804420957427743, -1.1031679641959764, -1.0005252206052262, -1.0676521136611954, -0.5327001980825052, -0.3921247659640064, -0.7757789033938501, -0.7135077324901224, -1.2997170565217337, -1.0126612810966715, -0.0859254534039181, -0.40999912267405625, -0.4192062755392114, -1.0236874498966069, -0.9299529927522433, -0.04239499031307381, -0.17428573618902932, -1.406880161906936, -1.0474021120374157, -1.2456218609191476, 0.4854097057794401, -0.1173811026662902, -0.6094356692703677, -0.6526678432972477, 0.7804546958322228, -0.945229288590308, 0.0440793833353319},
          2.479617468722671, 0.01692504683013314, 2.479617468722671, 0.016304120091744694,
          564.0, 0.004948876736294794, false},
      {
          {0.0, 2.0, 1.0, 0.0, 3.0, 0.0, 2.0, 0.0, 1.0, 0.0, 3.0, 3.0, 2.0, 0.0, 2.0, 1.0, 3.0, 3.0, 2.0, 1.0, 3.0, 0.0, 1.0, 2.0, 0.0, 2.0, 1.0, 1.0, 2.0, 3.0, 1.0, 3.0, 2.0, 0.0},
          {3.0, 4.0, 3.0, 1.0, 3.0, 0.0, 4.0, 0.0, 0.0, 0.0, 2.0, 3.0, 4.0, 4.0, 3.0, 3.0, 2.0, 1.0, 2.0, 1.0, 4.0, 3.0, 1.0, 4.0, 3.0, 0.0, 2.0, 0.0, 3.0, 1.0},
          -2.0119807423248695, 0.0491649085147285, -2.043463320145176, 0.04526191504947555,
          368.0, 0.05093109339951775, false},
      {
          {0.5345601515145547, 0.8497963103086879, 0.9005406067811349, 2.429662742808356, 0.041493767530219},
          {8.326684520305626, 1.768957621391672, 3.7403939642001434, 0.7240153676267299, 3.2582237202581954, 3.190934733743528, 0.13822379625221964, 0.020513706993312338, 0.9382483048466895, 1.8947172085845532, 1.6479266986883545, 2.813589983966377, 1.5369630549955495, 0.25011578743705515, 4.798668157613297, 0.33450904524105696, 0.335573664671361, 1.6313826675973393, 1.5682091410757966, 4.242713218741549, 2.2258684036053267, 0.09154059282236401, 2.55388017533579, 2.1404127226223864, 3.069389307959882, 5.3251754186741},
          -2.360204949861885, 0.03485852518306033, -1.458535969111587, 0.15543944217068648,
          37.0, 0.14352219691485543, true},
      {
          {-0.7521919897834092, -0.17002698096231297, 1.2237986025620728},
          {-1.0099215164740214, -0.4921609538339639, 0.934271198188088, 1.5324468986152857, -1.8246424854688927, 1.0440301120825541, -2.704918312795361},
          0.5473762098637103, 0.6033219814534386, 0.45298689828289107, 0.6625912967065035,
          13.0, 0.6666666666666666, true},
      {
          {3.0, 1.0, 2.0, 1.0, 4.0},
          {6.0, 3.0, 2.0, 4.0, 3.0, 5.0, 5.0, 2.0},
          -1.973624578788105, 0.07804210488484434, -1.9095627256993877, 0.0826018454874082,
          8.5, 0.11965811965811966, true},
      {
          {-1.1668924561855343, -3.0544681343181668, 2.0224140527303116, -0.31083589062864675, 0.5159000005492016, -0.5781978556201584, -1.3207195113913135, 1.100719869762504, 1.5644403255361237, 0.11036924503403481, 0.7432105737838459, -0.2368962839502915, 1.360962701473685, 0.4414451202747303, 0.4115828216038445, 0.9891284290981375, -1.3991207430447792, 0.5530847145721703, -0.7871840652840788, -0.2673270903677004, 0.2949165616655616, -0.3630434306048948, -0.4285898385422799, 0.13557903975925345},
          {0.6553644338425226, -0.029457005102977135, 0.5650364834018389, 0.128131787560892, 0.13155212878359024, -0.5478410803632118, 0.225367264442106, 1.1821208920244817, -1.3748706589018382, 0.5763000135709375, 0.5985146407495422, 0.8106712457843903, -0.8829463275121644, -0.2611243786772919, -0.08365415472880769, 0.2851709176998439, 0.43984284006552643, 1.2367975731385255, -0.2256311171390671, 1.210964313679572, -0.6611032089181699, 0.5184050782650459, -0.12616481513668712, 0.5181179092063926, 0.6971501824862167},
          -0.8053139126885465, 0.4257894594309878, -0.8134872951223179, 0.42004088138126505,
          258.0, 0.4065387836561368, false},
      {
          {1.0, 3.0, 3.0, 3.0, 3.0, 0.0, 0.0, 3.0, 3.0, 2.0, 3.0, 0.0, 0.0, 1.0, 2.0, 0.0, 3.0, 3.0, 0.0, 0.0, 0.0, 2.0},
          {4.0, 0.0, 2.0, 3.0, 4.0, 3.0, 0.0, 4.0, 4.0, 3.0, 0.0, 3.0, 4.0, 0.0, 1.0, 3.0, 1.0, 0.0, 1.0, 4.0, 0.0, 2.0, 3.0, 2.0, 3.0, 3.0, 3.0, 1.0, 1.0},
          -1.3642356773146036, 0.17898386971815175, -1.3491804629727802, 0.18348066376615718,
          245.0, 0.14716265073414303, false},
      {
          {0.45799983977135295, 0.36714375485345213, 0.6667233628069338, 1.0227064365404166, 0.423045390880874, 0.43790986446541746},
          {3.0078583842011404, 4.286517467012717, 0.2626878219511352, 2.2671712086100313, 2.05790699507245, 7.084993768094583, 1.950403380444377, 1.6998982776348446, 1.2536084511656176, 0.11325870143417303, 1.527823538692691, 0.7823986088811754, 2.7579964816106006, 8.21483272289556, 4.279745275265507, 1.0139004812173564, 1.766363834800618, 0.33359229465442003, 0.9635260665206702, 2.789193002758819, 0.4143385834860094},
          -3.6944682358706147, 0.0012869474718945608, -1.9890794013445685, 0.057741137024942664,
          26.0, 0.03051248268639573, true},
      {
          {-1.4978932142499537, 0.010276388984592532, 0.4274294040770187, -1.1666921684602594, -0.31857274202629987, -0.5476330319538042},
          {2.3642154849329318, -0.8310475173006708, -0.6809788553775206, 0.054948999871379134, 2.1834034890600122},
          -1.5059153822523954, 0.18788344521352202, -1.60806221516354, 0.14228306337787347,
          9.0, 0.329004329004329, true},
      {
          {3.0, 2.0, 2.0, 3.0, 3.0},
          {4.0, 6.0, 5.0, 6.0, 5.0, 4.0, 2.0, 1.0, 4.0},
          -2.4581435639761313, 0.032626899499612755, -1.9121452403353298, 0.08002331151080297,
          9.0, 0.06393606393606394, true},
      {
          {0.35192845601732975, 2.343299610528591, -0.5307934528235346, -0.007423720973660611, -0.8190700838680522, 0.901856638154522, -0.5129255822571497, -0.43459039728931237, 0.6844458439162859, -0.00809025531990494, -0.8815968070532969, 0.5574327127013121, -1.6946758963583428, -0.08082017560344074, -0.4413927511935514, 0.263507084816525, -0.190733501791592, 0.892074863888627, -0.5608391538974562, -0.2985240805736483, -0.9168299341971933, 0.8776156412198298, 0.5043015666492511, 1.0471219706477692},
          {0.3930465187183543, 0.43945511137473847, -0.08983467835977077, -0.05078367089871888, -0.7156301579758798, -0.9387930491461253, -0.42649072348775713, -0.5534239436895878, 1.1774230942430273, -0.23435714728900048, 0.3310511987445386, -1.3819367057368046, 0.5457579418377155, 0.05812009285610825, -0.9370490912471644, -1.152668631462644, 0.6142851219048078, -0.12977442796295227, 0.7387077590729355, -0.7548494046715402, -0.8105541898296236, 0.5554232492299789, 0.20413906520964775, -1.8240183324252528, -0.2254597784151155, -0.040017727440842144, -0.28085725396940997, 0.08979829497833375, -0.5663613103117473, -0.05072639644408872, -1.0776655038476557, -1.597351499308902, -1.2672338275878063, -0.947773721776502, -1.4509097187872175},
          1.8543101657619057, 0.07029718818060003, 1.9055114013914676, 0.061761808475885555,
          530.0, 0.09110035514317798, false},
      {
          {1.0, 2.0, 1.0, 1.0, 1.0, 2.0, 1.0, 3.0, 3.0, 3.0, 3.0, 0.0, 2.0, 1.0, 0.0, 1.0, 2.0, 0.0, 1.0, 3.0, 0.0, 0.0, 3.0, 1.0, 0.0, 0.0, 3.0, 1.0},
          {2.0, 4.0, 2.0, 0.0, 4.0, 1.0, 0.0, 0.0, 2.0, 3.0, 1.0, 0.0, 4.0, 4.0, 1.0, 2.0, 1.0, 0.0, 3.0, 2.0, 1.0, 4.0, 3.0, 3.0, 0.0, 3.0, 4.0, 4.0, 1.0, 4.0, 4.0},
          -2.2059196531887597, 0.03158729630354949, -2.1729381759459327, 0.033956028222689456,
          305.5, 0.04668668029300955, false},
      {
          {0.06859761506939722, 0.018887500830539288, 0.8650946357607068, 0.5134047438116647, 1.0054316014908993, 3.152144867045111, 0.9713561857186701, 0.2272703602764103},
          {3.915984855462515, 1.5972240832489972, 1.7552918275517275, 1.5149507838222231, 1.8610928844903478, 1.4542631154150936, 1.120587931001205, 0.9647845299560048, 0.00282925649573441, 0.513138132881284, 0.4747101595006992, 0.34913351175593466, 0.2811482061476831, 0.8188804644406646, 1.1863106848519633, 7.130383196344751, 1.4465824327070178, 0.44331948215195444, 0.4300128135917176, 1.7979977262275586, 0.027220908905818315, 1.981384422462034},
          -1.1499593211905592, 0.2641589762352466, -0.9451264775798158, 0.3526793750175117,
          62.0, 0.23706984114780216, true},
      {
          {0.7148851114510952, 0.7759101123297489, -1.261334952475863, -0.1275807449759659, -0.3231275134901977, 0.22086908568596358},
          {1.6789214394757477, 0.46905872817524935, 0.6228740781080429, -0.6556353612042111, 0.3316209410991117, 1.5908839640192827, 0.8587674316623787, -0.3599271552255509},
          -1.3317413734064616, 0.20892364343681172, -1.3138986276082671, 0.21344418446860045,
          16.0, 0.34498834498834496, true},
      {
          {3.0, 1.0, 2.0, 0.0, 3.0, 5.0, 2.0},
          {1.0, 4.0, 3.0, 1.0, 2.0, 2.0},
          0.15431804761892975, 0.8802111681451914, 0.15041420939904673, 0.8831605214854863,
          22.0, 0.9254079254079254, true},
      {
          {0.6620376846244557, 0.22649600173502335, -0.30578781180753384, -0.931524172569211, 0.0705267825120061, -0.2886374742066019, -0.04627017658764397, 0.7547083001448459, 0.35180028319802925, -0.5014957368554023, 0.24122700575684017, 0.708578047966579, 0.33020848662457103, 0.19439469105311788, -0.09192785015486858, 0.33732760252447036, 0.6961177752250831, 0.8222309068997584, -0.002805226796569536, 0.8208877654330777, -0.5056963510183833, 0.7988325183840608, 0.37840003301580993, -0.8528655474183957, 0.5274943831977468, 1.905105858040724, -1.0914889405716557, -0.7528915843746697, -0.7478973539185256, 1.3135138993959516, -0.28519459310293893, -0.5285995180594472, -0.8317473591377861},
          {-0.9527463495550097, 0.7056131869360309, 0.5149492411482639, -0.5869485660159759, -0.30185549414068896, 0.03784077327006896, -0.4794781419607119, -0.3339996634717461, -2.6494906917136802, -0.572835944047456, -0.3053412919181861, -1.0890333391478408, -0.7308331016996954, -1.3931002984513832, -0.7565583117319999, -0.19111096022460228, -1.5486926100541436, -1.2011092408360986, -1.6801860607928798, -0.7324860234968997, -1.2072304122032098, -0.8705807877670947, -0.1668068772349185},
          4.201678895047848, 0.0001204805173790547, 4.238298070832412, 8.84871031819045e-05,
          601.0, 0.00023263969552632803, false},
      {
          {3.0, 3.0, 0.0, 2.0, 1.0, 1.0, 3.0, 0.0, 3.0, 3.0, 3.0, 2.0, 3.0, 0.0, 2.0, 0.0, 1.0, 0.0, 1.0, 1.0, 1.0, 2.0, 0.0, 2.0, 3.0, 3.0, 0.0, 2.0, 1.0, 2.0, 2.0, 0.0, 3.0, 1.0},
          {3.0, 4.0, 4.0, 1.0, 3.0, 4.0, 4.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 2.0, 4.0, 1.0, 0.0, 4.0, 4.0, 4.0, 4.0, 4.0, 1.0, 0.0, 2.0, 0.0, 1.0, 2.0, 3.0, 2.0, 4.0, 0.0, 4.0, 2.0},
          -1.626159622096546, 0.10920665794481121, -1.626159622096546, 0.10868149651143656,
          457.0, 0.13122835936806737, false},
      {
          {0.5942350899664333, 1.0360397027501547, 0.5523169491898967, 1.5727293335522323, 1.8293759676080565, 0.7331015551481118, 1.6757010198282551, 0.11974496081428189},
          {0.9988231502381695, 2.146782484913337, 0.19099064507298327, 1.8187477587771408, 0.108426683987084, 1.5240513848688908, 3.7523232565321516, 0.6385116618821538, 0.35935064141216183, 0.7987263474446441, 0.5466713533502258, 5.257265793818624, 2.002077966302233, 1.3123605238163398, 0.4766463907095627, 2.304631206741187, 8.772681024629575, 0.893632768452024, 2.3366679231337115, 12.753927064168982, 1.4220844184159336},
          -1.9482419472089967, 0.06334360302238308, -1.2408827215563136, 0.22532318159057182,
          63.0, 0.3241689178720663, true},
      {
          {1.3618611720644938, -1.5234097113803797, 1.2165430181685184, -0.21319781867094556, -0.733755011043664, -0.8359834450968657, -2.8718772348606407, -0.03129262325928822},
          {-0.042536333144443716, -1.7840484151558742, -0.2438575112806256, 3.5800512436637977, 0.2203423472798326},
          -0.7930464894827295, 0.4556319859845893, -0.8633946834068936, 0.4063524274284126,
          16.0, 0.6216006216006216, true},
      {
          {3.0, 3.0, 5.0, 0.0},
          {5.0, 2.0, 3.0, 3.0, 2.0, 6.0, 5.0, 2.0},
          -0.6375355777548621, 0.5523820485670128, -0.6984302957695782, 0.5008270842295452,
          14.0, 0.7919191919191919, true},
      {
          {3.534268794330006, 0.3392817938164884, 0.9769051137389693, 0.2843339241580166, -0.3006290447268212, 0.030482077925024626, 0.8833505406056178, 0.2659894912378442, 0.904661991298886, -2.0769966445827133, -0.917183944159233, -0.14428690949554548, 0.11246620848142624, 0.966923130555017, 1.6116316695556465, -0.9148079216951116, -0.0023296659050854843, 1.295760572673318, -1.9101065574148184, 0.04275877398314217, -0.2183006975270366, 0.9618527915110877, 0.30705994140849346, -0.13444056375940588, 2.672086679248448, 0.8381235967234675},
          {-2.0435538155720416, -1.287627826672606, -0.8140649892099088, -0.18177350924789837, -0.3221767789263977, -0.38693084543096623, -0.9986403573326866, -1.009839541205512, -1.352514063190045, 0.6168574190474226, -1.1272217344867583, -1.4901764944860059, -1.3875823214032663, -0.7483105645354916, -1.7765779615732389, -1.31137689531539, 0.3262658167196072, -1.433391298747458, -1.2733276200534185, -0.6474612542547351, -0.4146421515148575, -2.209020596765144, -1.437196168531766, -1.3582365458257173, -0.8358342032399553, -0.9383956217996122, -0.01493161053618608, -0.8980852099059806, -0.687641339761174, -1.3078555786676738, -0.8067263937058398, -0.6691157033405977, -0.9520792249260295, -1.132004095273628, 0.0515708871767957, -2.2054694845037233},
          5.104132897120633, 1.1223724383676013e-05, 5.583619259343451, 6.018572717417958e-07,
          801.0, 2.10338481637916e-06, false},
      {
          {0.0, 2.0, 1.0, 0.0, 1.0, 2.0, 3.0, 3.0, 3.0, 0.0, 1.0, 1.0, 3.0, 2.0, 3.0, 3.0, 0.0, 3.0, 3.0, 2.0, 0.0, 1.0, 3.0, 3.0, 2.0, 1.0, 3.0, 0.0, 2.0, 1.0},
          {1.0, 1.0, 0.0, 3.0, 1.0, 4.0, 3.0, 3.0, 2.0, 3.0, 3.0, 4.0, 0.0, 0.0, 1.0, 0.0, 1.0, 2.0, 2.0, 4.0, 4.0, 0.0, 0.0, 0.0, 2.0, 1.0},
          0.007179804921656106, 0.9943012062108877, 0.007292660553995818, 0.9942082256631989,
          395.5, 0.9326903218441779, false},
      {
          {1.4137241075141638, 0.8404266448171623, 0.966320377860839, 0.1649704492873116, 1.0296904648954384},
          {0.3931018281832872, 2.5000153370039655, 0.510690697224572, 1.0296863121651378, 2.245152733770796, 0.332139225874077, 4.288712762235728, 0.05823992258425499, 1.2493763988759565, 2.804386174881592, 2.634690220067596, 1.6158233673030562, 0.7825003227955025, 1.081883493999773, 0.261433330090504, 3.8869352078453483, 2.991906234389027, 2.179303960797896, 0.4238214635006786, 1.1717229150075923, 0.21332044355870394, 0.5340814927928833, 0.5974288047580671, 4.028861872123571, 4.107449412418049, 1.1113362916457499, 2.6694658153265958, 3.007295638407134},
          -2.6301334916614394, 0.016349350969507105, -1.3928608088019063, 0.17357132778340345,
          47.0, 0.2677554184784441, true},
  };
  return cases;
}

}  // namespace fairaudit::testing
