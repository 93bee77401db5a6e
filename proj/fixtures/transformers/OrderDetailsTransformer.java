public class OrderDetailsTransformer extends OrderTransformer {
    public String getOrderSummary(Order order) {
        return this.transformOrder(order) + this.transformCustomer(order.getCustomer());
    }
}
