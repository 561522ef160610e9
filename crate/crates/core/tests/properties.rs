use proptest::prelude::*;

use infgon_core::graded::{dual_descriptor, f_image, GradedModuleDescriptor};
use infgon_core::{
    arc_to_object, arcs_cross, ext_dim, ext_via_crossing, hom_dim, object_to_arc, shift_object, Arc, CrossResult,
    FiniteArc, IndObject,
};

fn finite_arc() -> impl Strategy<Value = FiniteArc> {
    (-200i64..200, 2i64..60).prop_map(|(a, len)| FiniteArc::new(a, a + len).unwrap())
}

fn any_arc() -> impl Strategy<Value = Arc> {
    prop_oneof![
        3 => finite_arc().prop_map(Arc::Finite),
        1 => (-200i64..200).prop_map(Arc::Infinite),
    ]
}

fn object() -> impl Strategy<Value = IndObject> {
    any_arc().prop_map(|a| arc_to_object(a).unwrap())
}

fn descriptor() -> impl Strategy<Value = GradedModuleDescriptor> {
    prop_oneof![
        (-500i64..500, 1i64..100).prop_map(|(shift, length)| GradedModuleDescriptor::FiniteCyclic { shift, length }),
        (-500i64..500).prop_map(|shift| GradedModuleDescriptor::PolyFree { shift }),
        (-500i64..500).prop_map(|shift| GradedModuleDescriptor::PruferMod { shift }),
    ]
}

proptest! {
    #[test]
    fn round_trip(a in any_arc(), x in object()) {
        prop_assert_eq!(object_to_arc(arc_to_object(a).unwrap()), a);
        prop_assert_eq!(arc_to_object(object_to_arc(x)).unwrap(), x);
    }

    #[test]
    fn hom_shift_equivariant(a in object(), b in object(), t in -50i64..50) {
        prop_assert_eq!(hom_dim(a, b).value, hom_dim(shift_object(a, t), shift_object(b, t)).value);
    }

    #[test]
    fn serre_duality(a in finite_arc(), b in finite_arc()) {
        let (a, b) = (IndObject::Finite(a.to_object()), IndObject::Finite(b.to_object()));
        prop_assert_eq!(hom_dim(a, b).value, hom_dim(b, shift_object(a, 2)).value);
    }

    #[test]
    fn crossing_symmetric(x in any_arc(), y in any_arc()) {
        prop_assert_eq!(arcs_cross(x, y), arcs_cross(y, x));
    }

    #[test]
    fn crossing_is_ext(x in finite_arc(), y in any_arc()) {
        let ext = ext_via_crossing(Arc::Finite(x), y).unwrap().value;
        let (ox, oy) = (arc_to_object(Arc::Finite(x)).unwrap(), arc_to_object(y).unwrap());
        prop_assert_eq!(ext, ext_dim(ox, oy).value);
        prop_assert_eq!(ext, ext_dim(oy, ox).value);
        prop_assert_eq!(ext == 1, arcs_cross(Arc::Finite(x), y) == CrossResult::Cross);
    }

    #[test]
    fn shift_translates_arc(x in object(), t in -50i64..50) {
        let moved = object_to_arc(shift_object(x, t));
        let expected = match object_to_arc(x) {
            Arc::Finite(a) => Arc::finite(a.a() - t, a.b() - t).unwrap(),
            Arc::Infinite(m) => Arc::Infinite(m - t),
        };
        prop_assert_eq!(moved, expected);
    }

    #[test]
    fn duality_involution(m in descriptor()) {
        prop_assert_eq!(dual_descriptor(dual_descriptor(m)), m);
        for i in -20..=20 {
            prop_assert_eq!(dual_descriptor(m).dim(i), m.dim(-i));
        }
    }

    #[test]
    fn f_commutes_with_shift(x in object(), t in -50i64..50) {
        prop_assert_eq!(f_image(shift_object(x, t)), f_image(x).shifted(t));
    }
}
