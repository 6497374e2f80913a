"use strict";
/** Trailing-edge debounce; default 200 ms for slider-driven recomputes. */
Object.defineProperty(exports, "__esModule", { value: true });
exports.debounce = debounce;
function debounce(fn, waitMs = 200) {
    let timer = null;
    const wrapped = (...args) => {
        if (timer !== null) {
            clearTimeout(timer);
        }
        timer = setTimeout(() => {
            timer = null;
            fn(...args);
        }, waitMs);
    };
    wrapped.cancel = () => {
        if (timer !== null) {
            clearTimeout(timer);
            timer = null;
        }
    };
    return wrapped;
}
