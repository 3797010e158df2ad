use std::rc::Rc;
use std::sync::Arc;

pub trait Drawable {
    fn draw(&self);
}

impl<D: Drawable + ?Sized> Drawable for &D {
    fn draw(&self) {
        (**self).draw()
    }
}

impl<D: Drawable + ?Sized> Drawable for Box<D> {
    fn draw(&self) {
        (**self).draw()
    }
}

impl<D: Drawable + ?Sized> Drawable for Rc<D> {
    fn draw(&self) {
        (**self).draw()
    }
}

impl<D: Drawable + ?Sized> Drawable for Arc<D> {
    fn draw(&self) {
        (**self).draw()
    }
}

/// Calls `draw` once on every element, in order.
pub fn draw_all<'a, R, D>(range: R)
where
    R: IntoIterator<Item = &'a D>,
    D: Drawable + ?Sized + 'a,
{
    for d in range {
        d.draw();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cell::RefCell;
    use std::collections::LinkedList;

    struct Circle<'l>(&'l RefCell<Vec<String>>, u32);
    struct Square<'l>(&'l RefCell<Vec<String>>);

    impl Drawable for Circle<'_> {
        fn draw(&self) {
            self.0.borrow_mut().push(format!("circle {}", self.1));
        }
    }

    impl Drawable for Square<'_> {
        fn draw(&self) {
            self.0.borrow_mut().push("square".into());
        }
    }

    #[test]
    fn draws_each_in_order() {
        let log = RefCell::new(Vec::new());
        let (a, b, c) = (Circle(&log, 1), Square(&log), Circle(&log, 2));
        let shapes: Vec<&dyn Drawable> = vec![&a, &b, &c];
        draw_all(&shapes);
        assert_eq!(*log.borrow(), ["circle 1", "square", "circle 2"]);
    }

    #[test]
    fn owning_handles_and_empty() {
        let log = RefCell::new(Vec::new());
        let owned: LinkedList<Box<dyn Drawable + '_>> = [
            Box::new(Square(&log)) as Box<dyn Drawable>,
            Box::new(Circle(&log, 7)),
            Box::new(Square(&log)),
        ]
        .into_iter()
        .collect();
        draw_all(&owned);
        assert_eq!(log.borrow().len(), 3);

        let none: Vec<Box<dyn Drawable>> = Vec::new();
        draw_all(&none);
        assert_eq!(log.borrow().len(), 3);
    }
}
