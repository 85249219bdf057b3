"""Mailbox generator (Outdoors)."""

PARAMS = {
    "size": 0.257,
    "detail": 5,
    "roughness": 0.174,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Mailbox"
    for key, value in params.items():
        node[key] = value
    return node
