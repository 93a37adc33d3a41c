//! Reference values of Ai and Ai' on the half-integer grid x = k/2,
//! k = -43..=43, rounded from a 40-digit series evaluation. These anchor
//! the stepped Taylor propagation in `airy.rs` for 3.5 < |x| <= 21.7.

#[allow(clippy::excessive_precision)]
/// `AIRY_NODES[i]` holds (Ai, Ai') at x = (i as i32 - 43) / 2.
pub(super) const AIRY_NODES: [(f64, f64); 87] = [
    (-0.2503850429874952510168, 0.3549025322392532795228), // x = -21.5
    (0.2263584936789889662543, 0.6212944499089270724081), // x = -21.0
    (-0.04462568039701190981637, -1.183933019705147497003), // x = -20.5
    (-0.1764061270779846895902, 0.8928628567364712383984), // x = -20.0
    (0.2678002721025839457555, 0.08774108834375713570132), // x = -19.5
    (-0.1416612768804226563670, -1.004961125005139593506), // x = -19.0
    (-0.1120885397755404761189, 1.064643962279708443598), // x = -18.5
    (0.2712045408044142215844, -0.1590389152049680157737), // x = -18.0
    (-0.1726605906622262678196, -0.9024049204808416898592), // x = -17.5
    (-0.1052623002909523902321, 1.058684576644660077395), // x = -17.0
    (0.2788684805605508383086, -0.09462257996353213999977), // x = -16.5
    (-0.1430579316690996977775, -0.9747644416212727179573), // x = -16.0
    (-0.1664479540904197673882, 0.9049379354302121995067), // x = -15.5
    (0.2782174908708289295276, 0.2723742043086420208258), // x = -15.0
    (-0.03059741893955142282119, -1.095321272880539215034), // x = -14.5
    (-0.2659834827840777983848, 0.4430248770028436411715), // x = -14.0
    (0.1909812432962202926851, 0.8264327514252542379391), // x = -13.5
    (0.1715104393705370446316, -0.8715196778799533667225), // x = -13.0
    (-0.2762745613811602482252, -0.4193313304195051644060), // x = -12.5
    (-0.06655517505437312947419, 1.023110453367970729896), // x = -12.0
    (0.3054229700435926563996, 0.08772415432178444305361), // x = -11.5
    (-0.008759589255702381289966, -1.027327873664579421461), // x = -11.0
    (-0.3119260350510506008546, 0.09095748739068167287890), // x = -10.5
    (0.04024123848644319068943, 0.9962650441327900559046), // x = -10.0
    (0.3191032477191282013757, -0.1080953188118712389963), // x = -9.5
    (-0.02213372154734140367417, -0.9756639809263315947127), // x = -9.0
    (-0.3302902376302088790217, -0.03231334828463913587288), // x = -8.5
    (-0.05270505035638620262208, 0.9355609381983065510255), // x = -8.0
    (0.3217757163806478752673, 0.3188095066985545962101), // x = -7.5
    (0.1842808352505056372799, -0.7710081684101265477313), // x = -7.0
    (-0.2380203019971158035944, -0.6749524925132021729989), // x = -6.5
    (-0.3291451736298231052314, 0.3459354872813428949298), // x = -6.0
    (0.01778154127657497560302, 0.8641972177713983907721), // x = -5.5
    (0.3507610090241143197880, 0.3271928185544431367949), // x = -5.0
    (0.2921527810559594668816, -0.5233625323157477007085), // x = -4.5
    (-0.07026553294928951509908, -0.7906285753685813802965), // x = -4.0
    (-0.3755338231404319119344, -0.3434434334540481462879), // x = -3.5
    (-0.3788142936776580743472, 0.3145837692165988136508), // x = -3.0
    (-0.1123250676929660891875, 0.6788527342647943633721), // x = -2.5
    (0.2274074282016855759919, 0.6182590207416910414063), // x = -2.0
    (0.4642565777488694064743, 0.3091869672024104204162), // x = -1.5
    (0.5355608832923521187995, -0.01016056711664520939505), // x = -1.0
    (0.4757280916105395887986, -0.2040816703395473861448), // x = -0.5
    (0.3550280538878172392601, -0.2588194037928067984052), // x = +0.0
    (0.2316936064808334897691, -0.2249105326646838931360), // x = +0.5
    (0.1352924163128814155241, -0.1591474412967932127875), // x = +1.0
    (0.07174949700810540967356, -0.09738201284230131921848), // x = +1.5
    (0.03492413042327437913532, -0.05309038443365363170400), // x = +2.0
    (0.01572592338047048999527, -0.02625088103590323036490), // x = +2.5
    (0.006591139357460719144257, -0.01191297670595131847376), // x = +3.0
    (0.002584098786989634963277, -0.005004413967952582832030), // x = +3.5
    (0.0009515638512048018736215, -0.001958640950204178900138), // x = +4.0
    (0.0003302503235143089836587, -0.0007178665675575088886936), // x = +4.5
    (0.0001083444281360744173499, -0.0002474138908684624760002), // x = +5.0
    (0.00003368531190859981442529, -0.00008046339130556514337967), // x = +5.5
    (0.000009947694360252889570239, -0.00002476520039703495475418), // x = +6.0
    (0.000002795882343204913585460, -0.000007231931466601792559814), // x = +6.5
    (7.492128863997167080771e-7, -0.000002008150894738791991169), // x = +7.0
    (1.917256067513430751645e-7, -5.312713959720544684790e-7), // x = +7.5
    (4.692207616099231625649e-8, -1.341439297906786574291e-7), // x = +8.0
    (1.099700975519550650949e-8, -3.237725440447602255894e-8), // x = +8.5
    (2.471168430872489843289e-9, -7.480641389658946412760e-9), // x = +9.0
    (5.330263704617491626585e-10, -1.656639459374066626259e-9), // x = +9.5
    (1.104753255289868593355e-10, -3.520633676738923636621e-10), // x = +10.0
    (2.202274519283401643530e-11, -7.187696781451567091338e-11), // x = +10.5
    (4.226275864960359591299e-12, -1.411144124662851733545e-11), // x = +11.0
    (7.814290183962854346130e-13, -2.666679967504531405901e-12), // x = +11.5
    (1.393184688875360839049e-13, -4.854736554985308462994e-13), // x = +12.0
    (2.396827826078049936282e-14, -8.521346564673856445297e-14), // x = +12.5
    (3.981776078833335363023e-15, -1.443208057397262604448e-14), // x = +13.0
    (6.391673876741866650679e-16, -2.360142543924311285440e-15), // x = +13.5
    (9.920205491192377266317e-17, -3.729310110017900679713e-16), // x = +14.0
    (1.489537454965927195298e-17, -5.697388206185780610665e-17), // x = +14.5
    (2.164962520737992298989e-18, -8.420567954017772766124e-18), // x = +15.0
    (3.047538152456012684174e-19, -1.204683204453443742272e-18), // x = +15.5
    (4.156888828917024394748e-20, -1.669188676838180955916e-19), // x = +16.0
    (5.496911172967060763601e-21, -2.241108542525297257484e-20), // x = +16.5
    (7.050197298388614542441e-22, -2.917148219293313793260e-21), // x = +17.0
    (8.774220823294709737522e-23, -3.682949628790096691918e-22), // x = +17.5
    (1.060046682524795565634e-23, -4.512001860681941889169e-23), // x = +18.0
    (1.243733766971940457468e-24, -5.366178823414727709384e-24), // x = +18.5
    (1.417704377793352718938e-25, -6.198145827130015058572e-25), // x = +19.0
    (1.570590561517818377579e-26, -6.955532236463624257855e-26), // x = +19.5
    (1.691672868670540313554e-27, -7.586391625748354960515e-27), // x = +20.0
    (1.772136354314942104048e-28, -8.045156793755489589419e-28), // x = +20.5
    (1.806138442470383379480e-29, -8.298130258300445749861e-29), // x = +21.0
    (1.791508017269441364627e-30, -8.327583751655689469682e-30), // x = +21.5
];
