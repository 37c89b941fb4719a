// Reference values used by the test suites: 48 significant digits,
// generated offline with mpmath at 60-digit working precision and
// cross-checked between independent routes. Regenerate wholesale
// instead of editing single entries.
#![allow(dead_code)]

pub const EULER: &str = "0.577215664901532860606512090082402431042159335940";
pub const CATALAN: &str = "0.915965594177219015054603514932384110774149374282";

/// (p, a_num, a_den, gamma_p(a))
pub const GAMMA_P: &[(u32, i64, i64, &str)] = &[
    (0, 1, 1, "0.577215664901532860606512090082402431042159335940"),
    (0, 1, 2, "1.96351002602142347944097633299875556719315960466"),
    (0, 1, 4, "4.22745353337626540808953014609668357736724443871"),
    (0, 3, 4, "1.08586087978647216962688676281718069317007503933"),
    (0, 1, 3, "3.13203378002080632299641907428726885415542829672"),
    (0, 2, 3, "1.31823441578658847240234081664511312187136204863"),
    (0, 3, 10, "3.50252422220013298896449450737198159953790828840"),
    (0, 1, 5, "5.28903989659218829554720796244995210482558827421"),
    (0, 5, 2, "-0.703156640645243187225690333667911099473507062006"),
    (1, 1, 1, "-0.0728158454836767248605863758749013191377363383343"),
    (1, 1, 2, "-1.35345968080494151770868716917806440359128628904"),
    (1, 1, 4, "-5.51807635019940375269401104477665540710794460319"),
    (1, 3, 4, "-0.391298902404549774239874192189296371450389731967"),
    (1, 1, 3, "-3.25955751591791019525087458267655925797647220440"),
    (1, 2, 3, "-0.598906284285989292567876021269250256663913407818"),
    (1, 3, 10, "-3.97959181859701966326534140093387112388934181303"),
    (1, 1, 5, "-8.03020551103597688762789134665103485399863869527"),
    (1, 5, 2, "-0.237475391757160486859565003237944025154946302624"),
    (2, 1, 1, "-0.00969036319287231848453038603521252935906580610134"),
    (2, 1, 2, "0.968864475220290711421711062323780654182598044760"),
    (2, 1, 4, "7.67970442580851652720056822104917680860482786796"),
    (2, 3, 4, "0.119376626018584219697236507122012616548724253705"),
    (2, 1, 3, "3.61916390961896362988718221618594170329408335143"),
    (2, 2, 3, "0.257412160840898114614756009605025669272458907589"),
    (2, 3, 10, "4.82779636050663535190174992226592782129081365824"),
    (2, 1, 5, "12.9407218907752717187444535392129187385200989368"),
    (2, 5, 2, "-0.101642855211555757680918134664898031988116559441"),
    (3, 1, 1, "0.00205383442030334586616004654275338428571580444541"),
    (3, 1, 2, "-0.667424273711380739555989196796920837464959169774"),
    (3, 1, 4, "-10.6614312337958863676872651665652834505961931404"),
    (3, 3, 4, "-0.0276661223223528500842944829407048242418756681788"),
    (3, 1, 3, "-3.98239479947116187618874035629222233959951658282"),
    (3, 2, 3, "-0.0973035546647373214866825469103536101767545784245"),
    (3, 3, 10, "-5.82209608809810969222119934890904916949923264496"),
    (3, 1, 5, "-20.8486531392387172785424977413791281811838896583"),
    (3, 5, 2, "-0.0458144737391789648748184262091711458545613307475"),
    (4, 1, 1, "0.00232537006546730005746817017752606800090446941378"),
    (4, 1, 2, "0.459547445076771458152588212660335615181252454114"),
    (4, 1, 4, "14.7730111982165744712336209742137065121181981090"),
    (4, 3, 4, "0.00937466019667217661138745873593906020567761908613"),
    (4, 1, 3, "4.36870208166762655782772518267527981800005925239"),
    (4, 2, 3, "0.0397278869525733321336972178859813641565941500668"),
    (4, 3, 10, "7.00288642944635765111247419756715989529116086734"),
    (4, 1, 5, "33.5483293720164671279940203402145807522491636203"),
    (4, 5, 2, "-0.0201414203853224401368735534818458710062572089825"),
    (5, 1, 1, "0.000793323817301062701753334877444444830731539404585"),
    (5, 1, 2, "-0.320812026677865490224304534146106465679393741219"),
    (5, 1, 4, "-20.4793829077899767595731224521023901781280640399"),
    (5, 3, 4, "-0.00357873936586486386231034136010475141851107540608"),
    (5, 1, 3, "-4.80073184201979393998345154013754604550117505392"),
    (5, 2, 3, "-0.0176373125264944490693544167757455312909290763555"),
    (5, 3, 10, "-8.43196796841714078747761752785393738874544547451"),
    (5, 1, 5, "-53.9922702550881928279963856119385035348511264976"),
    (5, 5, 2, "-0.00811257245215604097363046683541508411680335034870"),
    (6, 1, 1, "-0.000238769345430199609872421841908004277783715156358"),
    (6, 1, 2, "0.222019509755189404867521777974458746469672314996"),
    (6, 1, 4, "28.3925631803173249259364041205660563215650873456"),
    (6, 3, 4, "0.00000931326315228971025652089928887180005776396968864"),
    (6, 1, 3, "5.27535422022524200404475318961496696219138553243"),
    (6, 2, 3, "0.00612722828123767667323934118448884936136980835681"),
    (6, 3, 10, "10.1534371399021959693043036443137149155569645609"),
    (6, 1, 5, "86.8997885805443864252676780806438203658937395610"),
    (6, 5, 2, "-0.00275363218390900993027094363276327126608017136712"),
];

/// (s, a, [d^k/ds^k zeta(s,a) for k=0..4])
pub const HURWITZ_JETS: &[(&str, &str, [&str; 5])] = &[
    ("2", "0.7", ["2.83404915669461062684564398100791864739900918629", "-0.266255478734480593034231863640784362219960688634", "2.26662381845282177791799236042401558128194542894", "-5.91066658016731991131852481816305982000152167365", "24.0334510334167488065404452318141635245797315871"]),
    ("0.5", "0.3", ["0.0111527803099698103632744908184397030315706615083", "-1.83287963677582241030312156868691256803196482462", "-13.3600049072796024405494271607508745565658616692", "-92.8085286164745294246230106928925538579858850632", "-764.164430675238615938697995723963395086324656341"]),
    ("-1.5", "2.3", ["-1.65473038036626518141645346798252871469898712145", "0.221092543908076756600715456354764592083007386706", "-0.246081124574254506631092754322890041119063169949", "-0.123810255892344286402582100993599954956611355037", "-0.249396658193176322121993372939812694671908823139"]),
    ("3", "0.25", ["64.6638699687684601666689835894219949436449047514", "88.4388994609145663234091472641632424649645704493", "123.246012571727534673510043614406516260035980640", "170.136340733978326263418176811762193623049780151", "237.123998817946555000111794727651439806433529797"]),
    ("0", "0.42", ["0.0800000000000000000000000000000000000000000000000", "-0.172074806076658570808848502232192269041574249823", "-1.24774136142859612412189721232276215812441264233", "-5.34185577761129950016672339702471817229714991621", "-23.4356390937124047615380386446664943795051230696"]),
    ("-1", "1", ["-0.0833333333333333333333333333333333333333333333333", "-0.165421143700450929213919660242780642764036380335", "-0.250204424109600389291093792699470121859391609266", "-0.382531524919772293479997004457730992261391748796", "-0.747486432837022063320459235385439309211056066074"]),
    ("1.5", "1", ["2.61237534868548834334856756792407163057080065240", "-3.93223973743110151070638857840601520269274355489", "15.9895563712256867497188974132073364750833608931", "-96.0009940067355411983724251578459239207131388215", "768.001908943210518738405657483036890035940478773"]),
];

/// d^k/ds^k eta(s) at s=1, k=0..6
pub const ETA_DERIVS_AT1: [&str; 7] = [
    "0.693147180559945309417232121458176568075500134360",
    "0.159868903742430971756947870324916570496222023756",
    "-0.0653725925588985991462073993882010532285881491929",
    "0.00941395023249308973517195536233302898158317379665",
    "0.0179969381068914077953678214361526238981123451390",
    "-0.0245149076564097829074228006861371102875707092379",
    "0.0166857960004258622388110794632109698363059272775",
];

/// (s, t, sum_{n>=0} (-1)^n (n+t)^{-s})
pub const ALT_HURWITZ: &[(&str, &str, &str)] = &[
    ("2.3", "0.7", "2.04624102454163732787912401139083480564498247262"),
    ("-1.5", "1", "0.118680870719840212043598557249192987856012401632"),
    ("0.3", "0.25", "0.997579950502988837096300378893600445614253163387"),
    ("2", "0.6", "2.48647260215150755674238701283407292693179676112"),
    ("3", "1", "0.901542677369695714049803621133587493073739719255"),
];

/// (t, [d^k/ds^k of the alternating Hurwitz sum at s=1, k=0..3])
pub const ALT_HURWITZ_JETS_AT1: &[(&str, [&str; 4])] = &[
    ("0.6", ["1.26875782774699726478659843710757308995187389935", "0.961278050463702335346095524378295093342290222475", "0.437141879218585551256679017300025441337368746867", "0.189277579952601018486556901066302555947987638684"]),
    ("1", ["0.693147180559945309417232121458176568075500134360", "0.159868903742430971756947870324916570496222023756", "-0.0653725925588985991462073993882010532285881491929", "0.00941395023249308973517195536233302898158317379665"]),
    ("0.75", ["0.974990988798722096719900334529210844005920219995", "0.517715331176066601522424350724900914423389824779", "0.0858670402635473937677598133957487165267140702515", "0.0115101057551909220253776061385473344233597294560"]),
];

/// d^k/ds^k beta(s) at s=1, k=0..3
pub const BETA_DERIVS_AT1: [&str; 4] = [
    "0.785398163397448309615660845819875721049292349844",
    "0.192901316796912429363189764028032785245096867620",
    "-0.154141724429335883403954139823812548326959616282",
    "0.0948828592056037001424736112294319982900298511095",
];
pub const BETA_2: &str = "0.915965594177219015054603514932384110774149374282";
pub const BETA_3: &str = "0.968946146259369380483634845846918600069540267684";

/// d^m/dx^m Gamma(x) at x=1, m=1..8
pub const GAMMA_DERIVS_AT1: [&str; 8] = [
    "-0.577215664901532860606512090082402431042159335940",
    "1.97811199065594511079079130300126941587836704146",
    "-5.44487445648531773409936100413765068957166869444",
    "23.5614740840256044960731270565244204086537683134",
    "-117.839408268377424252564169654964961062091180858",
    "715.067362527318859070784422396634118586993343772",
    "-5019.84887262985493120919523510941610114590600016",
    "40243.6215733357581341761602525229670169664109195",
];

/// int_0^inf log^n(t)/(e^t+1) dt, n=0..4
pub const FERMI_LOG: [&str; 5] = [
    "0.693147180559945309417232121458176568075500134360",
    "-0.240226506959100712333551263163332485865276475797",
    "1.12119248545455773840341165864446543417192723924",
    "-2.70276738806473314989393389868616149743816717298",
    "12.0700804544142380956273458718747957884635518564",
];

pub const VARDI: &str = "-0.260442806300988445540093868789727219531819177723";

/// (x_num, x_den, sin(2 pi x) * int_0^1 loglog(1/u) / (1 - 2u cos(2 pi x) + u^2) du)
pub const FOURIER_LOGLOG: &[(i64, i64, &str)] = &[
    (3, 10, "-0.156733934529853627774500475316152993586611609704"),
    (1, 4, "-0.260442806300988445540093868789727219531819177723"),
    (1, 6, "-0.581726239453136876057936515695597764231528607540"),
];

/// (x_num, x_den, sin(2 pi x) * int_0^inf log t / (cosh t - cos(2 pi x)) dt)
pub const COSH_LOGLOG: &[(i64, i64, &str)] = &[
    (1, 4, "-0.520885612601976891080187737579454439063638355446"),
    (1, 3, "-0.218795224402536520974488365989328773008431324145"),
    (3, 10, "-0.313467869059707255549000950632305987173223219408"),
];

/// (x_num, x_den, sin(2 pi x) * int_0^1 loglog(1/u) / (1 + 2u cos(2 pi x) + u^2) du)
pub const MALMSTEN_LOGLOG: &[(i64, i64, &str)] = &[
    (1, 8, "-0.0671911587355987648450442353656465560381517502195"),
    (1, 6, "-0.109397612201268260487244182994664386504215662073"),
    (1, 5, "-0.156733934529853627774500475316152993586611609704"),
];

/// (n_num, n_den, int_0^1 x^{n-1} loglog(1/x) / (1 + x^n) dx)
pub const ADAMCHIK_LOGLOG: &[(i64, i64, &str)] = &[
    (1, 1, "-0.240226506959100712333551263163332485865276475797"),
    (2, 1, "-0.360339760438651068500326894744998728797914713696"),
    (3, 1, "-0.333908839125969899587557993333278790502526033050"),
    (1, 2, "0.480453013918201424667102526326664971730552951595"),
    (3, 4, "-0.0544273193886757992379585697953419040619629279474"),
];

pub const SQRT_LOGLOG: &str = "0.480453013918201424667102526326664971730552951595";
pub const WEIGHTED_LOGLOG_RATIO: &str = "-0.0302619873228248552219653787691930902898645421102";

/// (m, theta_num, theta_den, Cl_m(pi * theta_num / theta_den))
pub const CLAUSEN: &[(u32, i64, i64, &str)] = &[
    (1, 1, 2, "-0.346573590279972654708616060729088284037750067180"),
    (2, 1, 3, "1.01494160640965362502120255427452028594168930753"),
    (2, 1, 2, "0.915965594177219015054603514932384110774149374282"),
    (3, 1, 3, "0.400685634386531428466579387170483330254995430780"),
    (4, 1, 2, "0.988944551741105336108422633228377821315860887063"),
    (5, 2, 3, "-0.512063088959688852509316289608411934843002923211"),
    (6, 1, 3, "0.879299732578698592513594956162513560952128479347"),
];

pub const PSI_QUARTER: &str = "-4.22745353337626540808953014609668357736724443871";
pub const PSI1_QUARTER: &str = "17.1973291545071107392713191193352240215068944015";
pub const PSI_THREE_QUARTER: &str = "-1.08586087978647216962688676281718069317007503933";
/// (x_num, x_den, log Gamma(x))
pub const LOG_GAMMA: &[(i64, i64, &str)] = &[
    (1, 4, "1.28802252469807745737061044021971729592537756511"),
    (1, 3, "0.985420646927767069187174036977961391735556496386"),
    (1, 6, "1.71673343507824046052784630958793075727937748711"),
    (3, 4, "0.203280951431295371481432971862429699759667314983"),
    (21, 50, "0.746863727128014170971481234173425370819823223815"),
    (7, 10, "0.260867246531666514385732417016759578142462162126"),
];

pub const ZETA_P_MINUS1: &str = "-0.165421143700450929213919660242780642764036380335";
pub const ZETA_P_0: &str = "-0.918938533204672741780329736405617639861397473638";
pub const ZETA_PP_0: &str = "-2.00635645590858485121010002672996043819899491016";
/// (a_num, a_den, d^2/ds^2 zeta(s,a) at s=0)
pub const ZETA_PP_0_AT: &[(i64, i64, &str)] = &[
    (1, 4, "-0.0903977432129927006523169981782027739596224114443"),
    (3, 4, "-1.90420108446173062654556008850861825599952429898"),
    (1, 2, "-1.51414581375652190253077456036015605822859375883"),
    (3, 10, "-0.559594120009963391706584512438987480062790530719"),
];

/// (n, d, d^d/ds^d zeta(s) at s=n)
pub const ZETA_INT_DERIVS: &[(u32, u32, &str)] = &[
    (2, 1, "-0.937548254315843753702574094567864977897860288615"),
    (2, 2, "1.98928023429890102342085868742151638149446077074"),
    (3, 1, "-0.198126242885636853330681821503285796875542793464"),
    (3, 2, "0.239746917305387184244176549838881299550927295543"),
    (4, 1, "-0.0689112658961253798488293655874408271500163748714"),
    (4, 2, "0.0650581613678806618603547617365702433464855664312"),
    (5, 1, "-0.0285737805094629500803898170838012126482152355564"),
    (5, 2, "0.0237313447830330857915704526532081508069373672217"),
    (6, 1, "-0.0128521651317957250759454014599236088288487539119"),
    (6, 2, "0.00993972873414422195430898816440238964288768575612"),
    (7, 1, "-0.00603351696087563779396536547853043239764001354869"),
    (7, 2, "0.00447631748444388438258187889077312458294113381155"),
];

/// (x_num, x_den, gamma_1 - gamma_1(1+x))
pub const PHI: &[(i64, i64, &str)] = &[
    (-3, 4, "5.44526050471572702783342466890175408797020826485"),
    (-1, 2, "1.28064383532126479284810079330316308445354995070"),
    (-1, 4, "0.318483056920873049379287816314395052312653393633"),
    (1, 5, "-0.0897998966182017102364916953548046627671044144025"),
    (3, 10, "-0.106466707973110370337732367480491871760430961326"),
    (1, 3, "-0.109095195570095603795447503965919175103735807403"),
    (1, 2, "-0.105650525798625825986363449613190051697450318019"),
    (1, 1, "0.0"),
    (5, 2, "0.531175839023145788072389512070247134597250452253"),
];

/// (r, x_num, x_den, zeta'(r, 1+x) - zeta'(r))
pub const PHI_R: &[(u32, i64, i64, &str)] = &[
    (2, 1, 2, "-0.0869595883000577151757572389990388472312017492121"),
    (2, 1, 1, "0.0"),
    (2, 5, 2, "0.239853643514546820577168499534664762677254634179"),
    (3, 1, 2, "-0.0683160754118476477558476633926464947025708515245"),
    (3, 1, 1, "0.0"),
    (3, 5, 2, "0.110464341237924759964939001261054106187862418687"),
];

/// (n, t_num, t_den, gamma_n(t) - log^n(t)/(2t) + log^{n+1}(t)/(n+1))
pub const F_N: &[(u32, i64, i64, &str)] = &[
    (0, 3, 4, "0.131512140668024575521001090156686594999898661769"),
    (0, 13, 10, "0.0469397687189060922820417763042180480241260265872"),
    (1, 3, 4, "-0.158130366698286623882545673955072954795648928236"),
    (1, 13, 10, "-0.0328409663632791190948922242397892435510259792229"),
    (2, 3, 4, "0.0562663598946450369983719644309259415714755780755"),
    (2, 13, 10, "-0.0244937387935825420614347159753856302848724929997"),
    (3, 3, 4, "-0.0100812117501284834191911941939282982852580161569"),
    (3, 13, 10, "-0.0104596287814363485318953205734744791870959891403"),
];

/// (t_num, t_den, sum_{n>=1} log(n) sin(2 pi n t)/n)
pub const LOG_SIN_SUM: &[(i64, i64, &str)] = &[
    (1, 3, "-0.192831803197332322781611572217175616680395034823"),
    (21, 50, "-0.108916193824721797932720924440583006067948357431"),
    (1, 4, "-0.192901316796912429363189764028032785245096867620"),
];
/// (t_num, t_den, sum_{n>=1} log(n) cos(2 pi n t)/n)
pub const LOG_COS_SUM: &[(i64, i64, &str)] = &[
    (1, 3, "0.0153308711331333507610400801079848559182538159434"),
    (3, 10, "-0.0473804961639344248221117717462283747383402327916"),
    (1, 4, "-0.160292055087885226455077328000874200617165463919"),
];

pub const HALF_LOG_SUM: &str = "1.28064383532126479284810079330316308445354995070";
pub const HALF_SHIFT_LOG_SUM: &str = "-0.0845734737175382488728093159180407273775845380696";
