//! Generators for the bundled 12 h profiles.
//!
//! All are sampled every minute. The default PV curve is zero for the first half
//! hour, then a sine over ten hours scaled 20% above the array rating and clipped
//! at it. The load starts near 200 W with a morning peak, a midday shoulder and an
//! evening peak. The clear-sky curve ramps to the rating over half an hour and
//! stays there for six hours.

use super::Profile;

pub const SAMPLE_STEP_S: f64 = 60.0;
pub const HORIZON_S: f64 = 12.0 * 3600.0;

const PV_RATING_W: f64 = 2230.0;
const PV_OVERSIZE: f64 = 1.2;
const PV_START_H: f64 = 0.5;
const PV_SPAN_H: f64 = 10.0;

pub const CLEAR_SKY_HORIZON_S: f64 = 6.0 * 3600.0;
const CLEAR_SKY_RAMP_S: f64 = 1800.0;

fn grid() -> impl Iterator<Item = f64> {
    grid_to(HORIZON_S)
}

fn grid_to(horizon_s: f64) -> impl Iterator<Item = f64> {
    let n = (horizon_s / SAMPLE_STEP_S).round() as usize;
    (0..=n).map(|i| i as f64 * SAMPLE_STEP_S)
}

fn round_mw(v: f64) -> f64 {
    (v * 1000.0).round() / 1000.0
}

pub fn pv_available_w(t_s: f64) -> f64 {
    let h = t_s / 3600.0 - PV_START_H;
    if !(0.0..=PV_SPAN_H).contains(&h) {
        return 0.0;
    }
    let raw = PV_OVERSIZE * PV_RATING_W * (std::f64::consts::PI * h / PV_SPAN_H).sin();
    raw.clamp(0.0, PV_RATING_W)
}

pub fn clear_sky_pv_w(t_s: f64) -> f64 {
    (PV_RATING_W * t_s / CLEAR_SKY_RAMP_S).clamp(0.0, PV_RATING_W)
}

fn bump(h: f64, centre: f64, width: f64) -> f64 {
    let z = (h - centre) / width;
    (-0.5 * z * z).exp()
}

pub fn load_w(t_s: f64) -> f64 {
    let h = t_s / 3600.0;
    200.0 + 180.0 * bump(h, 2.5, 0.8) + 100.0 * bump(h, 6.0, 1.5) + 250.0 * bump(h, 9.0, 1.0)
}

pub fn default_pv_profile() -> Profile {
    let samples = grid().map(|t| (t, round_mw(pv_available_w(t)))).collect();
    Profile::new("pv_default", samples).expect("valid generated profile")
}

pub fn default_load_profile() -> Profile {
    let samples = grid().map(|t| (t, round_mw(load_w(t)))).collect();
    Profile::new("load_default", samples).expect("valid generated profile")
}

pub fn clear_sky_pv_profile() -> Profile {
    let samples = grid_to(CLEAR_SKY_HORIZON_S)
        .map(|t| (t, round_mw(clear_sky_pv_w(t))))
        .collect();
    Profile::new("pv_clear_sky", samples).expect("valid generated profile")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pv_shape() {
        let pv = default_pv_profile();
        assert_eq!(pv.len(), 721);
        assert_eq!(pv.end(), HORIZON_S);
        assert_eq!(pv.sample(0.0).unwrap(), 0.0);
        assert_eq!(pv.sample(1800.0).unwrap(), 0.0);
        assert!(pv.sample(1860.0).unwrap() > 0.0);
        assert_eq!(pv.sample(5.5 * 3600.0).unwrap(), PV_RATING_W);
        assert_eq!(pv.max_value(), PV_RATING_W);
        assert_eq!(pv.sample(11.0 * 3600.0).unwrap(), 0.0);
    }

    #[test]
    fn clear_sky_shape() {
        let pv = clear_sky_pv_profile();
        assert_eq!(pv.len(), 361);
        assert_eq!(pv.sample(0.0).unwrap(), 0.0);
        assert_eq!(pv.sample(900.0).unwrap(), PV_RATING_W / 2.0);
        assert_eq!(pv.sample(1800.0).unwrap(), PV_RATING_W);
        assert_eq!(pv.sample(CLEAR_SKY_HORIZON_S).unwrap(), PV_RATING_W);
    }

    #[test]
    fn load_shape() {
        let load = default_load_profile();
        let start = load.sample(0.0).unwrap();
        assert!((200.0..205.0).contains(&start), "{start}");
        let peak = load.max_value();
        assert!(peak < 500.0, "{peak}");
    }
}
