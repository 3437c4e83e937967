//! Units, degree and sampled division for each catalog algebra.

use nalab::catalog;

fn main() {
    for a in catalog::all() {
        let units = a.find_units();
        let show = |e: Option<Vec<nalab::exactmath::Scalar>>| match e {
            Some(c) => a.format(&nalab::algebra::Element::new(c)),
            None => "none".to_string(),
        };
        let left = show(units.left_units.as_ref().map(|s| s.particular.clone()));
        let right = show(units.right_units.as_ref().map(|s| s.particular.clone()));
        let division = a.division_sampled(200, 0);
        println!(
            "{:<3} dim {}  left unit {left:<4} right unit {right:<4} degree {}  division sample {}",
            a.name(),
            a.dim(),
            a.degree(),
            division.all_invertible
        );
    }
}
